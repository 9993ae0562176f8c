//! Sparse polynomials over the signed monomials, without denominators.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::scalar::{Characteristic, Scalar};

use super::monomial::{mono_mul_unchecked, SuperMonomial, VarId};

/// A finite sum of monomials with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    m: u8,
    n: u8,
    chr: Characteristic,
    terms: BTreeMap<SuperMonomial, Scalar>,
}

impl Poly {
    pub fn zero(m: usize, n: usize, chr: Characteristic) -> Poly {
        Poly { m: m as u8, n: n as u8, chr, terms: BTreeMap::new() }
    }

    pub fn constant(m: usize, n: usize, c: Scalar) -> Poly {
        let mut p = Poly::zero(m, n, c.characteristic());
        p.add_term(SuperMonomial::one(m, n), c);
        p
    }

    pub fn one(m: usize, n: usize, chr: Characteristic) -> Poly {
        Poly::constant(m, n, Scalar::one(chr))
    }

    pub fn var(m: usize, n: usize, chr: Characteristic, v: VarId) -> Poly {
        Poly::term(SuperMonomial::var(m, n, v), Scalar::one(chr))
    }

    pub fn term(mono: SuperMonomial, c: Scalar) -> Poly {
        let (m, n) = mono.dims();
        let mut p = Poly::zero(m, n, c.characteristic());
        p.add_term(mono, c);
        p
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.m as usize, self.n as usize)
    }

    pub fn characteristic(&self) -> Characteristic {
        self.chr
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<SuperMonomial, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<SuperMonomial, Scalar> {
        self.terms
    }

    pub fn leading(&self) -> Option<(&SuperMonomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// The constant coefficient when the polynomial is a scalar.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero(self.chr)),
            1 => {
                let (mono, c) = self.terms.iter().next().unwrap();
                mono.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Whether every monomial has no odd variable.
    pub fn is_even_only(&self) -> bool {
        self.terms.keys().all(|k| k.odd_mask() == 0)
    }

    /// Parity when homogeneous; `None` for mixed parity. Zero counts as even.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(|k| k.parity());
        let first = it.next().unwrap_or(0);
        it.all(|p| p == first).then_some(first)
    }

    pub fn add_term(&mut self, mono: SuperMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for (k, c) in &other.terms {
            self.add_term(*k, c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Poly, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(*k, c.mul(s));
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut r = self.clone();
        r.add_scaled(other, &Scalar::from_i64(self.chr, -1));
        r
    }

    pub fn neg(&self) -> Poly {
        self.scale(&Scalar::from_i64(self.chr, -1))
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        let mut r = Poly::zero(self.m as usize, self.n as usize, self.chr);
        if s.is_zero() {
            return r;
        }
        for (k, c) in &self.terms {
            r.terms.insert(*k, c.mul(s));
        }
        r
    }

    /// Multiply by a single signed monomial term.
    pub fn mul_term(&self, mono: &SuperMonomial, c: &Scalar, on_left: bool) -> Poly {
        let mut r = Poly::zero(self.m as usize, self.n as usize, self.chr);
        for (k, ck) in &self.terms {
            let prod = if on_left { mono_mul_unchecked(mono, k) } else { mono_mul_unchecked(k, mono) };
            if let Some((neg, p)) = prod {
                let v = ck.mul(c);
                r.add_term(p, if neg { v.neg() } else { v });
            }
        }
        r
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut r = Poly::zero(self.m as usize, self.n as usize, self.chr);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((neg, p)) = mono_mul_unchecked(a, b) {
                    let v = ca.mul(cb);
                    r.add_term(p, if neg { v.neg() } else { v });
                }
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.m as usize, self.n as usize, self.chr);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient by a nonzero polynomial without odd variables, or `None`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (lm, lc) = d.leading()?;
        debug_assert!(d.is_even_only());
        let lc_inv = lc.inverse()?;
        let mut rem = self.clone();
        let mut q = Poly::zero(self.m as usize, self.n as usize, self.chr);
        while let Some((tm, tc)) = rem.leading() {
            if !tm.even_divisible_by(lm) {
                return None;
            }
            let qm = tm.even_quotient(lm);
            let qc = tc.mul(&lc_inv);
            let neg_qc = qc.neg();
            for (k, c) in &d.terms {
                // d is even, so multiplying by qm on either side carries no sign.
                let (_, p) = mono_mul_unchecked(&qm, k).expect("even factor");
                rem.add_term(p, c.mul(&neg_qc));
            }
            q.add_term(qm, qc);
        }
        Some(q)
    }

    /// Terms whose monomials carry no odd variable.
    pub fn odd_free_part(&self) -> Poly {
        let mut r = Poly::zero(self.m as usize, self.n as usize, self.chr);
        for (k, c) in &self.terms {
            if k.odd_mask() == 0 {
                r.terms.insert(*k, c.clone());
            }
        }
        r
    }

    pub fn map_terms(&self, mut f: impl FnMut(&SuperMonomial, &Scalar) -> Option<(SuperMonomial, Scalar)>) -> Poly {
        let mut r = Poly::zero(self.m as usize, self.n as usize, self.chr);
        for (k, c) in &self.terms {
            if let Some((k2, c2)) = f(k, c) {
                r.add_term(k2, c2);
            }
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, j: usize) -> Poly {
        Poly::var(2, 1, Characteristic::ZERO, VarId::new(2, 1, i, j).unwrap())
    }

    fn det2() -> Poly {
        x(1, 1).mul(&x(2, 2)).sub(&x(1, 2).mul(&x(2, 1)))
    }

    #[test]
    fn odd_sum_squares_to_zero() {
        let s = x(1, 3).add(&x(3, 1));
        assert!(s.mul(&s).is_zero());
    }

    #[test]
    fn exact_division() {
        let d = det2();
        let one = d.exact_div(&d).unwrap();
        assert_eq!(one, Poly::one(2, 1, Characteristic::ZERO));
        assert!(x(1, 1).exact_div(&x(1, 2)).is_none());
        let f = d.mul(&d).mul(&x(1, 3));
        assert_eq!(f.exact_div(&d).unwrap(), d.mul(&x(1, 3)));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let s = x(1, 1).add(&x(2, 2));
        assert_eq!(s.pow(3), s.mul(&s).mul(&s));
        assert_eq!(s.pow(0), Poly::one(2, 1, Characteristic::ZERO));
    }
}
