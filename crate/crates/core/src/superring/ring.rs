//! Ring descriptors and the shared per-ring context.

use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Characteristic, Scalar};

use super::monomial::{Block, SuperMonomial, VarId, MAX_EVEN_VARS, MAX_ODD_VARS};
use super::poly::Poly;

/// Dimensions `(m, n)` and the coefficient characteristic.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingSpec {
    pub m: usize,
    pub n: usize,
    pub characteristic: Characteristic,
}

impl RingSpec {
    pub fn new(m: usize, n: usize, characteristic: u64) -> Result<RingSpec> {
        let spec = RingSpec { m, n, characteristic: Characteristic::new(characteristic)? };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let (m, n) = (self.m, self.n);
        if m == 0 || n == 0 {
            return Err(Error::InvalidRing(format!("m and n must be positive, got ({m},{n})")));
        }
        if m * m + n * n > MAX_EVEN_VARS || 2 * m * n > MAX_ODD_VARS {
            return Err(Error::InvalidRing(format!("({m},{n}) exceeds the supported size")));
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn var(&self, i: usize, j: usize) -> Result<VarId> {
        VarId::new(self.m, self.n, i, j)
    }

    /// All index pairs of a block, row-major.
    pub fn block_positions(&self, block: Block) -> Vec<(usize, usize)> {
        let s = self.size();
        let mut out = Vec::new();
        for i in 1..=s {
            for j in 1..=s {
                if Block::of(self.m, i, j) == block {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{}) char {}", self.m, self.n, self.characteristic)
    }
}

/// Denominator-carrying numerator used inside caches.
#[derive(Clone, Debug)]
pub(crate) struct RawElem {
    pub num: Poly,
    pub a: u32,
    pub b: u32,
}

pub(crate) struct RingData {
    pub spec: RingSpec,
    pub d1: Poly,
    pub d2: Poly,
    d1_pows: RwLock<Vec<Poly>>,
    d2_pows: RwLock<Vec<Poly>>,
    pub adjugate: OnceLock<Vec<Poly>>,
    pub ys: OnceLock<Vec<RawElem>>,
    pub det_y22: OnceLock<RawElem>,
    pub det_y22_inv: OnceLock<RawElem>,
}

/// Shared handle to a localized supercommutative ring `K[x_ij]_{D1 D2}`.
///
/// Cloning is cheap. Caches are filled lazily and only ever read afterwards.
#[derive(Clone)]
pub struct SuperRing(pub(crate) Arc<RingData>);

impl fmt::Debug for SuperRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperRing{}", self.0.spec)
    }
}

impl PartialEq for SuperRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for SuperRing {}

impl SuperRing {
    pub fn new(spec: RingSpec) -> Result<SuperRing> {
        spec.validate()?;
        let (m, n, chr) = (spec.m, spec.n, spec.characteristic);
        let first: Vec<usize> = (1..=m).collect();
        let second: Vec<usize> = (m + 1..=m + n).collect();
        let d1 = minor_poly(&spec, &first, &first);
        let d2 = minor_poly(&spec, &second, &second);
        let one = Poly::one(m, n, chr);
        Ok(SuperRing(Arc::new(RingData {
            spec,
            d1_pows: RwLock::new(vec![one.clone(), d1.clone()]),
            d2_pows: RwLock::new(vec![one, d2.clone()]),
            d1,
            d2,
            adjugate: OnceLock::new(),
            ys: OnceLock::new(),
            det_y22: OnceLock::new(),
            det_y22_inv: OnceLock::new(),
        })))
    }

    /// Convenience constructor from dimensions and characteristic.
    pub fn with(m: usize, n: usize, characteristic: u64) -> Result<SuperRing> {
        SuperRing::new(RingSpec::new(m, n, characteristic)?)
    }

    pub fn spec(&self) -> &RingSpec {
        &self.0.spec
    }

    pub fn m(&self) -> usize {
        self.0.spec.m
    }

    pub fn n(&self) -> usize {
        self.0.spec.n
    }

    pub fn characteristic(&self) -> Characteristic {
        self.0.spec.characteristic
    }

    pub fn scalar(&self, v: i64) -> Scalar {
        Scalar::from_i64(self.characteristic(), v)
    }

    pub(crate) fn d_poly(&self, second: bool) -> &Poly {
        if second {
            &self.0.d2
        } else {
            &self.0.d1
        }
    }

    /// `D1^k` or `D2^k` as a polynomial, cached.
    pub(crate) fn d_pow(&self, second: bool, k: u32) -> Poly {
        let lock = if second { &self.0.d2_pows } else { &self.0.d1_pows };
        if let Some(p) = lock.read().expect("cache lock").get(k as usize) {
            return p.clone();
        }
        let mut w = lock.write().expect("cache lock");
        while w.len() <= k as usize {
            let next = w.last().unwrap().mul(self.d_poly(second));
            w.push(next);
        }
        w[k as usize].clone()
    }

    pub(crate) fn zero_poly(&self) -> Poly {
        Poly::zero(self.m(), self.n(), self.characteristic())
    }

    pub(crate) fn one_mono(&self) -> SuperMonomial {
        SuperMonomial::one(self.m(), self.n())
    }
}

/// Determinant of the submatrix of variables with the given (1-based) rows and columns.
///
/// Meant for submatrices inside one even block, where all entries commute.
pub fn minor_poly(spec: &RingSpec, rows: &[usize], cols: &[usize]) -> Poly {
    assert_eq!(rows.len(), cols.len(), "square minor");
    let (m, n, chr) = (spec.m, spec.n, spec.characteristic);
    let mut out = Poly::zero(m, n, chr);
    for (perm, negative) in permutations_with_sign(rows.len()) {
        let mut mono = SuperMonomial::one(m, n);
        for (r, &p) in rows.iter().zip(perm.iter()) {
            let v = VarId::new(m, n, *r, cols[p]).expect("index in range");
            debug_assert!(!v.block().is_odd());
            let e = mono.even_exponent(v.slot());
            mono = mono.with_even_exponent(v.slot(), e + 1);
        }
        out.add_term(mono, Scalar::from_i64(chr, if negative { -1 } else { 1 }));
    }
    out
}

/// All permutations of `0..k` with a flag for odd permutations.
pub fn permutations_with_sign(k: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, k: usize, out: &mut Vec<(Vec<usize>, bool)>) {
        if prefix.len() == k {
            let mut inv = 0;
            for a in 0..k {
                for b in a + 1..k {
                    if prefix[a] > prefix[b] {
                        inv += 1;
                    }
                }
            }
            out.push((prefix.clone(), inv % 2 == 1));
            return;
        }
        for c in 0..k {
            if !used[c] {
                used[c] = true;
                prefix.push(c);
                rec(prefix, used, k, out);
                prefix.pop();
                used[c] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], k, &mut out);
    out
}
