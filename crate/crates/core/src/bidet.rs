//! Young tableaux, bideterminants over the diagonal blocks and their
//! straightening into semistandard ones.
//!
//! A bideterminant `T^λ(i:j)` is the product, over the columns of `λ`, of the
//! minors whose row indices are read from the column of `i` and whose column
//! indices are read from the same column of `j`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filtration::{Membership, SpanMatrix};
use crate::scalar::Scalar;
use crate::superring::{minor_poly, Poly, RingSpec, SuperElem, SuperRing};
use crate::weightcomb::{all_partitions, partition_dominance_le, Partition};

/// A filling of a Young diagram by positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<Vec<Vec<u32>>> for Tableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<u32>>) -> Result<Tableau> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<u32>> {
    fn from(t: Tableau) -> Vec<Vec<u32>> {
        t.rows
    }
}

impl Tableau {
    /// Tableau from its rows; row lengths must be weakly decreasing and entries positive.
    pub fn new(mut rows: Vec<Vec<u32>>) -> Result<Tableau> {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::InvalidArgument("tableau entries must be positive".into()));
        }
        Ok(Tableau { shape, rows })
    }

    /// Fill `shape` row by row from `entries`.
    pub fn from_row_major(shape: &Partition, entries: &[u32]) -> Result<Tableau> {
        if entries.len() != shape.size() as usize {
            return Err(Error::InvalidArgument(format!(
                "{} entries for a shape of size {}",
                entries.len(),
                shape.size()
            )));
        }
        let mut rows = Vec::new();
        let mut it = entries.iter().copied();
        for &len in shape.parts() {
            rows.push(it.by_ref().take(len as usize).collect());
        }
        Tableau::new(rows)
    }

    pub fn empty() -> Tableau {
        Tableau { shape: Partition::empty(), rows: Vec::new() }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn entries(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Columns read top to bottom.
    pub fn columns(&self) -> Vec<Vec<u32>> {
        let width = self.shape.part(0) as usize;
        (0..width).map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect()).collect()
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Multiplicity of each letter `1..=alphabet`.
    pub fn content(&self, alphabet: usize) -> Vec<u32> {
        let mut c = vec![0; alphabet];
        for &x in self.rows.iter().flatten() {
            if let Some(slot) = c.get_mut(x as usize - 1) {
                *slot += 1;
            }
        }
        c
    }

    /// Boxed ASCII rendering with the entries inside.
    pub fn diagram(&self) -> String {
        if self.rows.is_empty() {
            return "(empty)\n".into();
        }
        let w = self.max_entry().to_string().len();
        let border = |len: usize| format!("+{}\n", format!("{}+", "-".repeat(w)).repeat(len));
        let mut out = border(self.rows[0].len());
        for row in &self.rows {
            out.push('|');
            for x in row {
                out.push_str(&format!("{x:>w$}|"));
            }
            out.push('\n');
            out.push_str(&border(row.len()));
        }
        out
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Row `k` filled with `k`.
pub fn canonical_tableau(shape: &Partition) -> Tableau {
    let rows = shape.parts().iter().enumerate().map(|(k, &len)| vec![k as u32 + 1; len as usize]).collect();
    Tableau { shape: shape.clone(), rows }
}

/// Rows weakly increase, columns strictly increase.
pub fn is_semistandard(t: &Tableau) -> bool {
    let rows_ok = t.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
    let cols_ok = t.rows.windows(2).all(|pair| pair[1].iter().zip(&pair[0]).all(|(below, above)| below > above));
    rows_ok && cols_ok
}

/// Every semistandard filling of `shape` with letters `1..=alphabet`, in
/// lexicographic order of the row-major entries.
pub fn enumerate_semistandard(shape: &Partition, alphabet: usize) -> Vec<Tableau> {
    let cells: Vec<(usize, usize)> =
        shape.parts().iter().enumerate().flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c))).collect();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l as usize]).collect();
    let mut out = Vec::new();
    fn rec(idx: usize, cells: &[(usize, usize)], rows: &mut Vec<Vec<u32>>, alphabet: u32, out: &mut Vec<Tableau>, shape: &Partition) {
        if idx == cells.len() {
            out.push(Tableau { shape: shape.clone(), rows: rows.clone() });
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { rows[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=alphabet {
            rows[r][c] = v;
            rec(idx + 1, cells, rows, alphabet, out, shape);
        }
        rows[r][c] = 0;
    }
    rec(0, &cells, &mut rows, alphabet as u32, &mut out, shape);
    out
}

/// Which diagonal block a bideterminant lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockSide {
    /// Upper-left block, letters `1..=m`.
    Plus,
    /// Lower-right block, letters `1..=n` shifted by `m`.
    Minus,
}

impl BlockSide {
    pub fn alphabet(self, spec: &RingSpec) -> usize {
        match self {
            BlockSide::Plus => spec.m,
            BlockSide::Minus => spec.n,
        }
    }

    fn offset(self, spec: &RingSpec) -> usize {
        match self {
            BlockSide::Plus => 0,
            BlockSide::Minus => spec.m,
        }
    }
}

impl fmt::Display for BlockSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BlockSide::Plus => "plus",
            BlockSide::Minus => "minus",
        })
    }
}

/// `T^λ(i:j)` over one diagonal block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bidet {
    pub side: BlockSide,
    pub left: Tableau,
    pub right: Tableau,
}

impl Bidet {
    pub fn new(side: BlockSide, left: Tableau, right: Tableau) -> Result<Bidet> {
        if left.shape() != right.shape() {
            return Err(Error::InvalidArgument(format!("fillings {left} and {right} have different shapes")));
        }
        Ok(Bidet { side, left, right })
    }

    pub fn shape(&self) -> &Partition {
        self.left.shape()
    }

    pub fn is_standard(&self) -> bool {
        is_semistandard(&self.left) && is_semistandard(&self.right)
    }

    fn validate(&self, spec: &RingSpec) -> Result<()> {
        let a = self.side.alphabet(spec) as u32;
        if self.left.max_entry() > a || self.right.max_entry() > a {
            return Err(Error::IndexOutOfRange(format!("{self} uses letters beyond {a}")));
        }
        Ok(())
    }
}

impl fmt::Display for Bidet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}{}({}:{})", if self.side == BlockSide::Plus { "+" } else { "-" }, self.shape(), self.left, self.right)
    }
}

/// `Det^e · T^λ(i:j)` with `Det` the determinant of the same block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GenBidet {
    pub bidet: Bidet,
    pub exponent: i64,
}

impl GenBidet {
    pub fn new(bidet: Bidet, exponent: i64) -> GenBidet {
        GenBidet { bidet, exponent }
    }

    /// A pure determinant power.
    pub fn det_power(side: BlockSide, exponent: i64) -> GenBidet {
        GenBidet { bidet: Bidet { side, left: Tableau::empty(), right: Tableau::empty() }, exponent }
    }

    pub fn side(&self) -> BlockSide {
        self.bidet.side
    }

    pub fn shape(&self) -> &Partition {
        self.bidet.shape()
    }

    pub fn is_standard(&self) -> bool {
        self.bidet.is_standard()
    }
}

impl fmt::Display for GenBidet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = if self.bidet.side == BlockSide::Plus { "D1" } else { "D2" };
        if self.exponent != 0 {
            write!(f, "{d}^{}*", self.exponent)?;
        }
        write!(f, "{}", self.bidet)
    }
}

/// The numerator polynomial of a bideterminant.
pub(crate) fn bidet_poly(spec: &RingSpec, b: &Bidet) -> Result<Poly> {
    b.validate(spec)?;
    let off = b.side.offset(spec);
    let mut out = Poly::one(spec.m, spec.n, spec.characteristic);
    for (ci, cj) in b.left.columns().iter().zip(b.right.columns()) {
        let rows: Vec<usize> = ci.iter().map(|&x| x as usize + off).collect();
        let cols: Vec<usize> = cj.iter().map(|&x| x as usize + off).collect();
        let minor = minor_poly(spec, &rows, &cols);
        if minor.is_zero() {
            return Ok(Poly::zero(spec.m, spec.n, spec.characteristic));
        }
        out = out.mul(&minor);
    }
    Ok(out)
}

pub fn bidet_expand(ring: &SuperRing, b: &Bidet) -> Result<SuperElem> {
    Ok(ring.elem(bidet_poly(ring.spec(), b)?, 0, 0))
}

pub fn genbidet_expand(ring: &SuperRing, g: &GenBidet) -> Result<SuperElem> {
    let base = bidet_expand(ring, &g.bidet)?;
    let shift = match g.bidet.side {
        BlockSide::Plus => ring.d_power(g.exponent, 0),
        BlockSide::Minus => ring.d_power(0, g.exponent),
    };
    Ok(&base * &shift)
}

/// Semistandard bideterminants of one shape.
pub fn standard_bidets(side: BlockSide, alphabet: usize, shape: &Partition) -> Vec<Bidet> {
    let tabs = enumerate_semistandard(shape, alphabet);
    let mut out = Vec::with_capacity(tabs.len() * tabs.len());
    for i in &tabs {
        for j in &tabs {
            out.push(Bidet { side, left: i.clone(), right: j.clone() });
        }
    }
    out
}

/// Shapes `μ ⊴ λ` with at most `max_rows` rows.
pub fn shapes_below(shape: &Partition, max_rows: usize) -> Vec<Partition> {
    all_partitions(shape.size(), max_rows)
        .into_iter()
        .filter(|mu| partition_dominance_le(mu, shape).unwrap_or(false))
        .collect()
}

/// Rewrite `g` as a combination of semistandard generalized bideterminants
/// with the same exponent and shapes in `bound` (default: shapes `⊴` that of `g`).
pub fn straighten(ring: &SuperRing, g: &GenBidet, bound: Option<&[Partition]>) -> Result<Vec<(GenBidet, Scalar)>> {
    let spec = ring.spec();
    let side = g.side();
    let alphabet = side.alphabet(spec);
    let target = bidet_poly(spec, &g.bidet)?;
    if target.is_zero() {
        return Ok(Vec::new());
    }
    let shapes = match bound {
        Some(b) => b.to_vec(),
        None => shapes_below(g.shape(), alphabet),
    };
    let (lc, rc) = (g.bidet.left.content(alphabet), g.bidet.right.content(alphabet));
    let mut cands = Vec::new();
    for mu in &shapes {
        if mu.size() != g.shape().size() {
            continue;
        }
        let tabs = enumerate_semistandard(mu, alphabet);
        let lefts: Vec<&Tableau> = tabs.iter().filter(|t| t.content(alphabet) == lc).collect();
        let rights: Vec<&Tableau> = tabs.iter().filter(|t| t.content(alphabet) == rc).collect();
        for l in &lefts {
            for r in &rights {
                cands.push(Bidet { side, left: (*l).clone(), right: (*r).clone() });
            }
        }
    }
    let mut span = SpanMatrix::new(ring, 0, 0, true);
    for c in &cands {
        span.insert(&ring.elem(bidet_poly(spec, c)?, 0, 0))?;
    }
    match span.membership(&ring.elem(target, 0, 0))? {
        Membership::InSpan(Some(coords)) => Ok(cands
            .into_iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(b, c)| (GenBidet::new(b, g.exponent), c))
            .collect()),
        Membership::InSpan(None) => unreachable!("coordinates are tracked"),
        Membership::NotInSpan { .. } => Err(Error::NotInSpan(format!("{g} with shapes {shapes:?}"))),
    }
}

/// Expand a straightening result back into the ring.
pub fn expand_combination(ring: &SuperRing, combo: &[(GenBidet, Scalar)]) -> Result<SuperElem> {
    let mut parts = Vec::with_capacity(combo.len());
    for (g, c) in combo {
        parts.push(genbidet_expand(ring, g)?.scale(c));
    }
    Ok(ring.sum(&parts))
}

/// Exact rank and count of all semistandard bideterminants of size `r` over
/// an alphabet of size `m`, computed per bi-content block.
pub fn standard_rank(m: usize, r: u32) -> Result<(usize, usize)> {
    let ring = SuperRing::with(m, 1, 0)?;
    let mut blocks: BTreeMap<(Vec<u32>, Vec<u32>), Vec<Bidet>> = BTreeMap::new();
    for shape in all_partitions(r, m) {
        for b in standard_bidets(BlockSide::Plus, m, &shape) {
            blocks.entry((b.left.content(m), b.right.content(m))).or_default().push(b);
        }
    }
    let mut rank = 0;
    let mut count = 0;
    for bidets in blocks.values() {
        let mut span = SpanMatrix::new(&ring, 0, 0, false);
        for b in bidets {
            span.insert(&bidet_expand(&ring, b)?)?;
        }
        rank += span.rank();
        count += bidets.len();
    }
    Ok((rank, count))
}
