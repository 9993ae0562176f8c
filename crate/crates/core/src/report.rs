//! Serializable verification reports.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::superring::{Block, RingSpec, SuperElem};

/// One verified identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed: Option<String>,
    pub pass: bool,
}

impl Check {
    pub fn compare(name: impl Into<String>, expected: &SuperElem, computed: &SuperElem) -> Check {
        Check {
            name: name.into(),
            expected: Some(expected.render()),
            computed: Some(computed.render()),
            pass: expected == computed,
        }
    }

    pub fn flag(name: impl Into<String>, pass: bool) -> Check {
        Check { name: name.into(), expected: None, computed: None, pass }
    }

    pub fn values(name: impl Into<String>, expected: impl ToString, computed: impl ToString) -> Check {
        let (e, c) = (expected.to_string(), computed.to_string());
        Check { name: name.into(), pass: e == c, expected: Some(e), computed: Some(c) }
    }
}

/// A titled list of checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>, checks: Vec<Check>) -> Report {
        Report { title: title.into(), checks }
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn total(&self) -> usize {
        self.checks.len()
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}/{} checks pass", self.title, self.passed(), self.total())?;
        for c in self.failures() {
            writeln!(f, "  FAIL {}", c.name)?;
            if let Some(e) = &c.expected {
                writeln!(f, "    expected: {e}")?;
            }
            if let Some(v) = &c.computed {
                writeln!(f, "    computed: {v}")?;
            }
        }
        Ok(())
    }
}

/// Pass counts for one (row block, column block) cell of an action table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSummary {
    pub row_block: Block,
    pub col_block: Block,
    pub instances: usize,
    pub passed: usize,
}

impl BlockSummary {
    pub fn pass(&self) -> bool {
        self.passed == self.instances
    }
}

/// An action table checked cell by cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub title: String,
    pub spec: RingSpec,
    pub blocks: Vec<BlockSummary>,
    pub checks: Vec<Check>,
}

impl TableReport {
    pub fn cells_passed(&self) -> usize {
        self.blocks.iter().filter(|b| b.pass()).count()
    }

    pub fn cells(&self) -> usize {
        self.blocks.len()
    }

    pub fn all_pass(&self) -> bool {
        self.blocks.iter().all(|b| b.pass())
    }
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        writeln!(f, "{:>6} | {:>9} {:>9} {:>9} {:>9}", "", "I11", "I12", "I21", "I22")?;
        for row in self.blocks.chunks(4) {
            write!(f, "{:>6} |", row[0].row_block.to_string())?;
            for b in row {
                let mark = if b.pass() { "ok" } else { "FAIL" };
                write!(f, " {:>9}", format!("{}/{} {mark}", b.passed, b.instances))?;
            }
            writeln!(f)?;
        }
        for c in self.checks.iter().filter(|c| !c.pass) {
            writeln!(f, "  FAIL {}", c.name)?;
            writeln!(f, "    expected: {}", c.expected.as_deref().unwrap_or(""))?;
            writeln!(f, "    computed: {}", c.computed.as_deref().unwrap_or(""))?;
        }
        Ok(())
    }
}
