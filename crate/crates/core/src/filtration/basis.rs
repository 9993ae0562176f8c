//! Bases of the even blocks `M_{≤λ}`, `M_{λ,l}` and of truncations of `C_{≤λ}`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::bidet::{enumerate_semistandard, genbidet_expand, Bidet, BlockSide, GenBidet};
use crate::error::{Error, Result};
use crate::glsuper::{phistar, phistar_gen};
use crate::superring::{SuperElem, SuperRing};
use crate::weightcomb::{super_order_prefix, tilde, GLWeight, SuperWeight};

use super::span::SpanMatrix;

/// `v⁺v⁻` with `v⁺` over the upper block and `v⁻` over the lower block.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EvBasisVector {
    pub plus: GenBidet,
    pub minus: GenBidet,
    #[serde(skip)]
    expansion: SuperElem,
}

impl EvBasisVector {
    pub fn new(ring: &SuperRing, plus: GenBidet, minus: GenBidet) -> Result<EvBasisVector> {
        if plus.side() != BlockSide::Plus || minus.side() != BlockSide::Minus {
            return Err(Error::InvalidArgument("factors must come from the plus and minus blocks".into()));
        }
        let expansion = &genbidet_expand(ring, &plus)? * &genbidet_expand(ring, &minus)?;
        Ok(EvBasisVector { plus, minus, expansion })
    }

    /// The element of the even subring.
    pub fn expansion(&self) -> &SuperElem {
        &self.expansion
    }
}

impl fmt::Display for EvBasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * {}", self.plus, self.minus)
    }
}

/// `y^ε · φ*(v) · y^ε′` with `ε` a subset of the upper-right positions and
/// `ε′` a subset of the lower-left positions.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CBasisVector {
    pub left_mask: u64,
    pub even: EvBasisVector,
    pub right_mask: u64,
    pub level: u32,
    #[serde(skip)]
    expansion: SuperElem,
}

impl CBasisVector {
    pub fn expansion(&self) -> &SuperElem {
        &self.expansion
    }
}

fn mask_positions(ring: &SuperRing, upper: bool, mask: u64) -> Vec<(usize, usize)> {
    let (m, n) = (ring.m(), ring.n());
    let all: Vec<(usize, usize)> = if upper {
        (1..=m).flat_map(|i| (m + 1..=m + n).map(move |j| (i, j))).collect()
    } else {
        (m + 1..=m + n).flat_map(|i| (1..=m).map(move |j| (i, j))).collect()
    };
    all.into_iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, p)| p).collect()
}

fn render_mask(ring: &SuperRing, upper: bool, mask: u64) -> String {
    mask_positions(ring, upper, mask).iter().map(|(i, j)| format!("y[{i},{j}]*")).collect()
}

impl fmt::Display for CBasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = self.expansion.ring();
        let left = render_mask(ring, true, self.left_mask);
        let right = render_mask(ring, false, self.right_mask);
        let right = right.trim_end_matches('*');
        let sep = if right.is_empty() { "" } else { "*" };
        write!(f, "{left}phi({}){sep}{right}", self.even)
    }
}

/// Ordered product of the odd `y` generators selected by `mask`.
pub fn mask_product(ring: &SuperRing, upper: bool, mask: u64) -> SuperElem {
    let mut out = ring.one();
    for (i, j) in mask_positions(ring, upper, mask) {
        out = &out * &phistar_gen(ring, i, j).expect("odd position");
    }
    out
}

fn weight_bidets(side: BlockSide, alphabet: usize, w: &GLWeight) -> Vec<GenBidet> {
    let (shape, shift) = tilde(w);
    let tabs = enumerate_semistandard(&shape, alphabet);
    let mut out = Vec::with_capacity(tabs.len() * tabs.len());
    for i in &tabs {
        for j in &tabs {
            out.push(GenBidet::new(Bidet { side, left: i.clone(), right: j.clone() }, shift));
        }
    }
    out
}

fn check_dims(ring: &SuperRing, lambda: &SuperWeight) -> Result<()> {
    let (m, n) = lambda.dims();
    if (m, n) != (ring.m(), ring.n()) {
        return Err(Error::Dimension(ring.m(), ring.n(), m, n));
    }
    Ok(())
}

/// Basis of `Σ_{μ ≤ λ} M_{≤μ⁺} M_{≤μ⁻}` for the interleaved order of the bidegree of `λ`.
pub fn m_leq_basis(ring: &SuperRing, lambda: &SuperWeight) -> Result<Vec<EvBasisVector>> {
    check_dims(ring, lambda)?;
    ev_basis_of(ring, &super_order_prefix(lambda))
}

/// Basis of `M_{<λ}`, empty when `λ` is first in its order.
pub fn m_less_basis(ring: &SuperRing, lambda: &SuperWeight) -> Result<Vec<EvBasisVector>> {
    check_dims(ring, lambda)?;
    let mut prefix = super_order_prefix(lambda);
    prefix.pop();
    ev_basis_of(ring, &prefix)
}

fn ev_basis_of(ring: &SuperRing, weights: &[SuperWeight]) -> Result<Vec<EvBasisVector>> {
    let (m, n) = (ring.m(), ring.n());
    let mut plus_seen = Vec::new();
    let mut minus_seen = Vec::new();
    for w in weights {
        if !plus_seen.contains(&w.plus) {
            plus_seen.push(w.plus.clone());
        }
        if !minus_seen.contains(&w.minus) {
            minus_seen.push(w.minus.clone());
        }
    }
    let plus: HashMap<&GLWeight, Vec<GenBidet>> =
        plus_seen.iter().map(|w| (w, weight_bidets(BlockSide::Plus, m, w))).collect();
    let minus: HashMap<&GLWeight, Vec<GenBidet>> =
        minus_seen.iter().map(|w| (w, weight_bidets(BlockSide::Minus, n, w))).collect();
    let mut out = Vec::new();
    for w in weights {
        for p in &plus[&w.plus] {
            for q in &minus[&w.minus] {
                out.push(EvBasisVector::new(ring, p.clone(), q.clone())?);
            }
        }
    }
    Ok(out)
}

/// Basis of `M_{λ,l} = M_{≤λ−lα}`.
pub fn m_lambda_l(ring: &SuperRing, lambda: &SuperWeight, l: u32) -> Result<Vec<EvBasisVector>> {
    m_leq_basis(ring, &lambda.minus_alpha(l as i64))
}

/// Caches `φ*` of the two factors of even basis vectors.
struct PhiCache {
    plus: HashMap<GenBidet, SuperElem>,
    minus: HashMap<GenBidet, SuperElem>,
    left: Vec<SuperElem>,
    right: Vec<SuperElem>,
}

impl PhiCache {
    fn new(ring: &SuperRing) -> PhiCache {
        let masks = 1u64 << (ring.m() * ring.n());
        PhiCache {
            plus: HashMap::new(),
            minus: HashMap::new(),
            left: (0..masks).map(|k| mask_product(ring, true, k)).collect(),
            right: (0..masks).map(|k| mask_product(ring, false, k)).collect(),
        }
    }

    fn phi(&mut self, ring: &SuperRing, v: &EvBasisVector) -> Result<SuperElem> {
        // the upper block is fixed by φ*
        if !self.plus.contains_key(&v.plus) {
            self.plus.insert(v.plus.clone(), genbidet_expand(ring, &v.plus)?);
        }
        if !self.minus.contains_key(&v.minus) {
            let e = phistar(ring, &genbidet_expand(ring, &v.minus)?)?;
            self.minus.insert(v.minus.clone(), e);
        }
        Ok(&self.plus[&v.plus] * &self.minus[&v.minus])
    }

    fn wrap(&mut self, ring: &SuperRing, evs: Vec<EvBasisVector>, level: u32) -> Result<Vec<CBasisVector>> {
        let mut out = Vec::with_capacity(evs.len() * self.left.len() * self.right.len());
        for ev in evs {
            let core = self.phi(ring, &ev)?;
            for (lm, l) in self.left.iter().enumerate() {
                let lc = l * &core;
                for (rm, r) in self.right.iter().enumerate() {
                    out.push(CBasisVector {
                        left_mask: lm as u64,
                        even: ev.clone(),
                        right_mask: rm as u64,
                        level,
                        expansion: &lc * r,
                    });
                }
            }
        }
        Ok(out)
    }
}

/// The vectors whose classes form a basis of `C_{≤λ}/C_{<λ}`.
pub fn c_quotient_basis(ring: &SuperRing, lambda: &SuperWeight) -> Result<Vec<CBasisVector>> {
    check_dims(ring, lambda)?;
    let ev = ev_basis_of(ring, std::slice::from_ref(lambda))?;
    PhiCache::new(ring).wrap(ring, ev, 0)
}

/// All odd-mask products of `φ*(M_{λ,l})` for `l ≤ lmax`, in level order.
pub fn c_leq_vectors_truncated(ring: &SuperRing, lambda: &SuperWeight, lmax: u32) -> Result<Vec<CBasisVector>> {
    check_dims(ring, lambda)?;
    let mut cache = PhiCache::new(ring);
    let mut out = Vec::new();
    for l in 0..=lmax {
        out.extend(cache.wrap(ring, m_lambda_l(ring, lambda, l)?, l)?);
    }
    Ok(out)
}

/// Odd-mask products of `φ*(M_{<λ})` and of `φ*(M_{λ,l})` for `1 ≤ l ≤ lmax`.
pub fn c_less_vectors_truncated(ring: &SuperRing, lambda: &SuperWeight, lmax: u32) -> Result<Vec<CBasisVector>> {
    check_dims(ring, lambda)?;
    let mut cache = PhiCache::new(ring);
    let mut out = cache.wrap(ring, m_less_basis(ring, lambda)?, 0)?;
    for l in 1..=lmax {
        out.extend(cache.wrap(ring, m_lambda_l(ring, lambda, l)?, l)?);
    }
    Ok(out)
}

/// Only the odd-mask products of `φ*(M_{λ,l})` for one level.
pub fn c_level_vectors(ring: &SuperRing, lambda: &SuperWeight, l: u32) -> Result<Vec<CBasisVector>> {
    check_dims(ring, lambda)?;
    PhiCache::new(ring).wrap(ring, m_lambda_l(ring, lambda, l)?, l)
}

/// Independent vectors among [`c_leq_vectors_truncated`], in order.
pub fn c_leq_basis_truncated(ring: &SuperRing, lambda: &SuperWeight, lmax: u32) -> Result<Vec<CBasisVector>> {
    let all = c_leq_vectors_truncated(ring, lambda, lmax)?;
    let span = span_of(ring, &all)?;
    let keep = span.independent_indices().to_vec();
    let mut all: Vec<Option<CBasisVector>> = all.into_iter().map(Some).collect();
    Ok(keep.into_iter().map(|i| all[i].take().expect("distinct indices")).collect())
}

/// Span of the expansions of `vectors`.
pub fn span_of(ring: &SuperRing, vectors: &[CBasisVector]) -> Result<SpanMatrix> {
    let elems: Vec<SuperElem> = vectors.iter().map(|v| v.expansion.clone()).collect();
    SpanMatrix::from_vectors(ring, &elems, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bidet::Tableau;
    use crate::superring::parse_expr;

    fn ring(m: usize, n: usize) -> SuperRing {
        SuperRing::with(m, n, 0).unwrap()
    }

    fn sw(a: &[i64], b: &[i64]) -> SuperWeight {
        SuperWeight::new(a.to_vec(), b.to_vec()).unwrap()
    }

    fn expansions(v: &[EvBasisVector]) -> Vec<SuperElem> {
        v.iter().map(|x| x.expansion().clone()).collect()
    }

    #[test]
    fn gl11_even_blocks_are_monomials() {
        let r = ring(1, 1);
        for k in -2..3i64 {
            let lam = sw(&[k], &[2 - k]);
            let b = m_leq_basis(&r, &lam).unwrap();
            let expect = &r.x(1, 1).unwrap().pow_i64(k).unwrap() * &r.x(2, 2).unwrap().pow_i64(2 - k).unwrap();
            assert_eq!(expansions(&b), vec![expect]);
            let b1 = m_lambda_l(&r, &lam, 1).unwrap();
            let expect = &r.x(1, 1).unwrap().pow_i64(k - 1).unwrap() * &r.x(2, 2).unwrap().pow_i64(3 - k).unwrap();
            assert_eq!(expansions(&b1), vec![expect]);
            assert!(m_less_basis(&r, &lam).unwrap().is_empty());
        }
    }

    #[test]
    fn level_zero_equals_leq_basis() {
        let r = ring(2, 1);
        let lam = sw(&[1, 0], &[1]);
        assert_eq!(m_lambda_l(&r, &lam, 0).unwrap(), m_leq_basis(&r, &lam).unwrap());
    }

    #[test]
    fn rank_two_one_even_block() {
        let r = ring(2, 1);
        let lam = sw(&[1, 0], &[1]);
        let b = m_leq_basis(&r, &lam).unwrap();
        assert_eq!(b.len(), 4);
        let span = SpanMatrix::from_vectors(&r, &expansions(&b), false).unwrap();
        assert_eq!(span.rank(), 4);
        let x33 = parse_expr("x[3,3]", &r).unwrap();
        for v in &b {
            assert_eq!(v.minus, GenBidet::det_power(BlockSide::Minus, 1));
            assert!(v.expansion().exact_divide(&x33).is_ok());
        }
        // the first level below runs over (0,0) and (1,-1)
        let b1 = m_lambda_l(&r, &lam, 1).unwrap();
        assert_eq!(b1.len(), 10);
        assert_eq!(SpanMatrix::from_vectors(&r, &expansions(&b1), false).unwrap().rank(), 10);
    }

    #[test]
    fn level_bidegrees() {
        let lam = sw(&[2, 1], &[1]);
        for l in 0..3 {
            assert_eq!(lam.minus_alpha(l).bidegree(), (3 - l, 1 + l));
        }
    }

    #[test]
    fn gl11_quotient_vectors() {
        let r = ring(1, 1);
        let lam = sw(&[2], &[1]);
        let q = c_quotient_basis(&r, &lam).unwrap();
        assert_eq!(q.len(), 4);
        let a = parse_expr("y[1,1]^2*y[2,2]", &r).unwrap();
        let y12 = parse_expr("y[1,2]", &r).unwrap();
        let y21 = parse_expr("y[2,1]", &r).unwrap();
        let expect = [a.clone(), &a * &y21, &y12 * &a, &(&y12 * &a) * &y21];
        for (v, e) in q.iter().zip(expect.iter()) {
            assert_eq!(v.expansion(), e, "{v}");
        }
        assert_eq!(q[3].to_string(), "y[1,2]*phi(D1^2*T+()([]:[]) * D2^1*T-()([]:[]))*y[2,1]");
    }

    #[test]
    fn truncations_nest() {
        let r = ring(1, 1);
        let lam = sw(&[1], &[0]);
        let b0 = c_leq_basis_truncated(&r, &lam, 0).unwrap();
        assert_eq!(b0.len(), 4);
        let b1 = c_leq_basis_truncated(&r, &lam, 1).unwrap();
        let s1 = span_of(&r, &b1).unwrap();
        assert_eq!(s1.rank(), 8);
        for v in &b0 {
            assert!(s1.contains(v.expansion()).unwrap());
        }
    }

    #[test]
    fn minus_block_uses_lower_variables() {
        let r = ring(1, 2);
        let lam = sw(&[0], &[1, 0]);
        let b = m_leq_basis(&r, &lam).unwrap();
        assert_eq!(b.len(), 4);
        let t = |x: u32| Tableau::new(vec![vec![x]]).unwrap();
        assert_eq!(b[1].minus.bidet, Bidet { side: BlockSide::Minus, left: t(1), right: t(2) });
        assert_eq!(b[1].expansion(), &parse_expr("x[2,3]", &r).unwrap());
    }
}
