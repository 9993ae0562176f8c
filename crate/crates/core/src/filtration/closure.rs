//! Level-shift closure of truncated `C_{≤λ}` under superderivations, quotient
//! dimensions, and the witness that a single level is not closed.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::bidet::enumerate_semistandard;
use crate::error::{Error, Result};
use crate::superderive::{derive, Derivation};
use crate::superring::SuperRing;
use crate::weightcomb::{tilde, SuperWeight};

use super::basis::{c_leq_vectors_truncated, c_less_vectors_truncated, c_level_vectors, c_quotient_basis, span_of};
use super::span::{Membership, SpanMatrix};

/// Outcome for one (vector, derivation) pair or one counted quantity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationCheck {
    pub vector: String,
    pub derivation: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Machine-readable result of a filtration verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    pub title: String,
    pub lambda: SuperWeight,
    pub lmax: u32,
    pub checks: Vec<FiltrationCheck>,
    pub dims: BTreeMap<String, usize>,
}

impl FiltrationReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Pass).count()
    }

    pub fn total(&self) -> usize {
        self.checks.len()
    }

    pub fn all_pass(&self) -> bool {
        self.passed() == self.total()
    }

    pub fn failures(&self) -> impl Iterator<Item = &FiltrationCheck> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for FiltrationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} for lambda = {} (lmax {})", self.title, self.lambda, self.lmax)?;
        for (k, v) in &self.dims {
            writeln!(f, "  {k}: {v}")?;
        }
        writeln!(f, "  {}/{} checks pass", self.passed(), self.total())?;
        for c in self.failures().take(20) {
            write!(f, "  FAIL {} under {}", c.vector, c.derivation)?;
            if let Some(r) = &c.residual {
                write!(f, ": residual {r}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn membership_check(span: &SpanMatrix, vector: String, d: &Derivation, image: &crate::SuperElem) -> Result<FiltrationCheck> {
    Ok(match span.membership(image)? {
        Membership::InSpan(_) => {
            FiltrationCheck { vector, derivation: d.to_string(), status: Status::Pass, residual: None }
        }
        Membership::NotInSpan { residual } => FiltrationCheck {
            vector,
            derivation: d.to_string(),
            status: Status::Fail,
            residual: Some(residual.render()),
        },
    })
}

/// Every derivative of every vector of truncation `lmax − 1` must lie in the
/// span of truncation `lmax`.
pub fn verify_closure(ring: &SuperRing, lambda: &SuperWeight, lmax: u32) -> Result<FiltrationReport> {
    if lmax == 0 {
        return Err(Error::InvalidArgument("closure needs lmax ≥ 1".into()));
    }
    let target = c_leq_vectors_truncated(ring, lambda, lmax)?;
    let span = span_of(ring, &target)?;
    let sources: Vec<_> = target.iter().filter(|v| v.level < lmax).collect();
    let ders = Derivation::all(ring.spec());
    let pairs: Vec<_> = sources.iter().flat_map(|v| ders.iter().map(move |d| (*v, d))).collect();
    let checks = pairs
        .par_iter()
        .map(|(v, d)| membership_check(&span, v.to_string(), d, &derive(d, v.expansion())))
        .collect::<Result<Vec<_>>>()?;
    let dims = BTreeMap::from([
        ("source_vectors".to_string(), sources.len()),
        ("derivations".to_string(), ders.len()),
        ("target_vectors".to_string(), target.len()),
        ("target_rank".to_string(), span.rank()),
    ]);
    Ok(FiltrationReport { title: "closure".into(), lambda: lambda.clone(), lmax, checks, dims })
}

/// Derivations at even positions keep truncation `lmax` inside itself.
pub fn verify_even_stability(ring: &SuperRing, lambda: &SuperWeight, lmax: u32) -> Result<FiltrationReport> {
    let target = c_leq_vectors_truncated(ring, lambda, lmax)?;
    let span = span_of(ring, &target)?;
    let ders: Vec<Derivation> = Derivation::all(ring.spec()).into_iter().filter(|d| d.parity() == 0).collect();
    let pairs: Vec<_> = target.iter().flat_map(|v| ders.iter().map(move |d| (v, d))).collect();
    let checks = pairs
        .par_iter()
        .map(|(v, d)| membership_check(&span, v.to_string(), d, &derive(d, v.expansion())))
        .collect::<Result<Vec<_>>>()?;
    let dims = BTreeMap::from([("vectors".to_string(), target.len()), ("rank".to_string(), span.rank())]);
    Ok(FiltrationReport { title: "even stability".into(), lambda: lambda.clone(), lmax, checks, dims })
}

/// `(#SSYT(λ̃⁺))² · (#SSYT(λ̃⁻))²`.
pub fn quotient_pair_counts(lambda: &SuperWeight) -> (usize, usize) {
    let (m, n) = lambda.dims();
    let kp = enumerate_semistandard(&tilde(&lambda.plus).0, m).len();
    let km = enumerate_semistandard(&tilde(&lambda.minus).0, n).len();
    (kp * kp, km * km)
}

/// Counts the quotient vectors against `2^{2mn} K⁺ K⁻` and checks that they
/// stay independent modulo `C_{<λ}` truncated at `lmax`.
pub fn verify_quotient_iso_dims(ring: &SuperRing, lambda: &SuperWeight, lmax: u32) -> Result<FiltrationReport> {
    let quotient = c_quotient_basis(ring, lambda)?;
    let lower = c_less_vectors_truncated(ring, lambda, lmax)?;
    let (kp, km) = quotient_pair_counts(lambda);
    let expected = (1usize << (2 * ring.m() * ring.n())) * kp * km;
    let a = quotient.iter().chain(&lower).map(|v| v.expansion().denominator().0).max().unwrap_or(0);
    let b = quotient.iter().chain(&lower).map(|v| v.expansion().denominator().1).max().unwrap_or(0);
    let mut span = SpanMatrix::new(ring, a, b, false);
    for v in &lower {
        span.insert(v.expansion())?;
    }
    let lower_rank = span.rank();
    let mut checks = vec![FiltrationCheck {
        vector: format!("{} quotient vectors", quotient.len()),
        derivation: "count".into(),
        status: if quotient.len() == expected { Status::Pass } else { Status::Fail },
        residual: (quotient.len() != expected).then(|| format!("expected {expected}")),
    }];
    for v in &quotient {
        let fresh = span.insert(v.expansion())?;
        checks.push(FiltrationCheck {
            vector: v.to_string(),
            derivation: "independent modulo lower".into(),
            status: if fresh { Status::Pass } else { Status::Fail },
            residual: None,
        });
    }
    let dims = BTreeMap::from([
        ("quotient".to_string(), quotient.len()),
        ("expected".to_string(), expected),
        ("lower_rank".to_string(), lower_rank),
        ("independent_mod_lower".to_string(), span.rank() - lower_rank),
    ]);
    Ok(FiltrationReport { title: "quotient dimension".into(), lambda: lambda.clone(), lmax, checks, dims })
}

/// A vector of level `l` with an odd derivative outside truncation `l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EscapeWitness {
    pub vector: String,
    pub derivation: String,
    pub residual: String,
    /// Whether the derivative lies in truncation `l + 1`.
    pub caught_next_level: bool,
}

/// Searches level `l` for an odd derivative escaping truncation `l`.
pub fn level_escape_witness(ring: &SuperRing, lambda: &SuperWeight, l: u32) -> Result<Option<EscapeWitness>> {
    let same = span_of(ring, &c_leq_vectors_truncated(ring, lambda, l)?)?;
    let next = span_of(ring, &c_leq_vectors_truncated(ring, lambda, l + 1)?)?;
    let odd: Vec<Derivation> = Derivation::all(ring.spec()).into_iter().filter(|d| d.parity() == 1).collect();
    for v in c_level_vectors(ring, lambda, l)? {
        for d in &odd {
            let image = derive(d, v.expansion());
            if let Membership::NotInSpan { residual } = same.membership(&image)? {
                return Ok(Some(EscapeWitness {
                    vector: v.to_string(),
                    derivation: d.to_string(),
                    residual: residual.render(),
                    caught_next_level: next.contains(&image)?,
                }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sw(a: &[i64], b: &[i64]) -> SuperWeight {
        SuperWeight::new(a.to_vec(), b.to_vec()).unwrap()
    }

    #[test]
    fn gl11_closure_small() {
        for chr in [0, 3] {
            let r = SuperRing::with(1, 1, chr).unwrap();
            for lam in [sw(&[1], &[1]), sw(&[2], &[-2]), sw(&[3], &[0])] {
                let rep = verify_closure(&r, &lam, 2).unwrap();
                assert!(rep.all_pass(), "{rep}");
                assert_eq!(rep.total(), 8 * 8);
            }
        }
    }

    #[test]
    fn gl11_even_stability() {
        let r = SuperRing::with(1, 1, 0).unwrap();
        let rep = verify_even_stability(&r, &sw(&[2], &[1]), 1).unwrap();
        assert!(rep.all_pass(), "{rep}");
    }

    #[test]
    fn gl11_quotient() {
        let r = SuperRing::with(1, 1, 0).unwrap();
        let rep = verify_quotient_iso_dims(&r, &sw(&[2], &[1]), 2).unwrap();
        assert!(rep.all_pass(), "{rep}");
        assert_eq!(rep.dims["quotient"], 4);
        assert_eq!(rep.dims["independent_mod_lower"], 4);
    }

    #[test]
    fn gl11_escape() {
        let r = SuperRing::with(1, 1, 0).unwrap();
        let w = level_escape_witness(&r, &sw(&[2], &[1]), 0).unwrap().expect("a witness");
        assert!(w.caught_next_level);
    }

    #[test]
    fn closure_needs_a_level() {
        let r = SuperRing::with(1, 1, 0).unwrap();
        assert!(verify_closure(&r, &sw(&[0], &[0]), 0).is_err());
    }
}
