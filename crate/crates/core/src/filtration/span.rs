//! Exact row echelon form over the monomial basis, used as a membership oracle.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::superring::{Poly, SuperElem, SuperMonomial, SuperRing};

#[derive(Clone, Debug)]
struct Row {
    // pivot first, pivot coefficient 1
    entries: Vec<(SuperMonomial, Scalar)>,
    combo: Vec<(usize, Scalar)>,
}

/// Outcome of a span membership query.
#[derive(Clone, Debug, PartialEq)]
pub enum Membership {
    /// Coordinates with respect to the inserted vectors, when tracked.
    InSpan(Option<Vec<Scalar>>),
    NotInSpan { residual: SuperElem },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::InSpan(_))
    }
}

/// Span of a finite list of ring elements sharing the denominator bound `D1^a D2^b`.
#[derive(Clone, Debug)]
pub struct SpanMatrix {
    ring: SuperRing,
    a: u32,
    b: u32,
    track: bool,
    inserted: usize,
    rows: Vec<Row>,
    pivot_of: HashMap<SuperMonomial, usize>,
    independent: Vec<usize>,
}

type Work = BTreeMap<SuperMonomial, Scalar>;

impl SpanMatrix {
    /// Empty span accepting vectors with denominator dividing `D1^a D2^b`.
    pub fn new(ring: &SuperRing, a: u32, b: u32, track: bool) -> SpanMatrix {
        SpanMatrix {
            ring: ring.clone(),
            a,
            b,
            track,
            inserted: 0,
            rows: Vec::new(),
            pivot_of: HashMap::new(),
            independent: Vec::new(),
        }
    }

    /// Span of `vectors` with the smallest common denominator.
    pub fn from_vectors(ring: &SuperRing, vectors: &[SuperElem], track: bool) -> Result<SpanMatrix> {
        let a = vectors.iter().map(|v| v.denominator().0).max().unwrap_or(0);
        let b = vectors.iter().map(|v| v.denominator().1).max().unwrap_or(0);
        let mut s = SpanMatrix::new(ring, a, b, track);
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub fn ring(&self) -> &SuperRing {
        &self.ring
    }

    pub fn denominator(&self) -> (u32, u32) {
        (self.a, self.b)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of vectors inserted so far.
    pub fn len(&self) -> usize {
        self.inserted
    }

    pub fn is_empty(&self) -> bool {
        self.inserted == 0
    }

    /// Indices of inserted vectors that raised the rank.
    pub fn independent_indices(&self) -> &[usize] {
        &self.independent
    }

    fn check(&self, v: &SuperElem) -> Result<()> {
        if v.ring() != &self.ring {
            let (s, o) = (self.ring.spec(), v.ring().spec());
            return Err(Error::Dimension(s.m, s.n, o.m, o.n));
        }
        Ok(())
    }

    fn lift(&self, v: &SuperElem) -> Option<Work> {
        let (a, b) = v.denominator();
        if a > self.a || b > self.b {
            return None;
        }
        let p: Poly = v.lifted_numerator(self.a, self.b);
        Some(p.into_terms())
    }

    fn reduce(&self, work: &mut Work, combo: Option<&mut BTreeMap<usize, Scalar>>) {
        let mut combo = combo;
        let mut cursor: Option<SuperMonomial> = None;
        loop {
            let next = match &cursor {
                None => work.iter().next(),
                Some(c) => work.range((std::ops::Bound::Excluded(*c), std::ops::Bound::Unbounded)).next(),
            };
            let Some((mono, coef)) = next.map(|(m, c)| (*m, c.clone())) else { break };
            if let Some(&ri) = self.pivot_of.get(&mono) {
                let row = &self.rows[ri];
                for (mm, c) in &row.entries {
                    let delta = coef.mul(c);
                    let slot = work.entry(*mm).or_insert_with(|| Scalar::zero(delta.characteristic()));
                    *slot = slot.sub(&delta);
                    if slot.is_zero() {
                        work.remove(mm);
                    }
                }
                if let Some(cb) = combo.as_deref_mut() {
                    for (i, c) in &row.combo {
                        let delta = coef.mul(c);
                        let slot = cb.entry(*i).or_insert_with(|| Scalar::zero(delta.characteristic()));
                        *slot = slot.sub(&delta);
                        if slot.is_zero() {
                            cb.remove(i);
                        }
                    }
                }
            }
            cursor = Some(mono);
        }
    }

    /// Add a vector; returns whether the rank grew.
    pub fn insert(&mut self, v: &SuperElem) -> Result<bool> {
        self.check(v)?;
        let mut work = self.lift(v).ok_or_else(|| {
            Error::InvalidArgument(format!("denominator of {v} exceeds D1^{}*D2^{}", self.a, self.b))
        })?;
        let idx = self.inserted;
        self.inserted += 1;
        let chr = self.ring.characteristic();
        let mut combo = BTreeMap::new();
        if self.track {
            combo.insert(idx, Scalar::one(chr));
        }
        self.reduce(&mut work, self.track.then_some(&mut combo));
        let Some((&pivot, lead)) = work.iter().next() else { return Ok(false) };
        let inv = lead.inverse().expect("nonzero pivot");
        let entries = work.into_iter().map(|(m, c)| (m, c.mul(&inv))).collect();
        let combo = combo.into_iter().map(|(i, c)| (i, c.mul(&inv))).collect();
        self.pivot_of.insert(pivot, self.rows.len());
        self.rows.push(Row { entries, combo });
        self.independent.push(idx);
        Ok(true)
    }

    /// Exact membership with coordinates (if tracked) or a nonzero residual.
    pub fn membership(&self, v: &SuperElem) -> Result<Membership> {
        self.check(v)?;
        let Some(mut work) = self.lift(v) else {
            return Ok(Membership::NotInSpan { residual: v.clone() });
        };
        let mut combo = BTreeMap::new();
        self.reduce(&mut work, self.track.then_some(&mut combo));
        if !work.is_empty() {
            let mut p = Poly::zero(self.ring.m(), self.ring.n(), self.ring.characteristic());
            for (m, c) in work {
                p.add_term(m, c);
            }
            return Ok(Membership::NotInSpan { residual: self.ring.elem(p, self.a, self.b) });
        }
        if !self.track {
            return Ok(Membership::InSpan(None));
        }
        // v = Σ_rows c_r row_r and row_r = Σ combo, so v = -Σ combo_final
        let chr = self.ring.characteristic();
        let mut coords = vec![Scalar::zero(chr); self.inserted];
        for (i, c) in combo {
            coords[i] = c.neg();
        }
        Ok(Membership::InSpan(Some(coords)))
    }

    pub fn contains(&self, v: &SuperElem) -> Result<bool> {
        Ok(self.membership(v)?.is_member())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superring::parse_expr;

    fn ring() -> SuperRing {
        SuperRing::with(1, 1, 0).unwrap()
    }

    fn e(r: &SuperRing, s: &str) -> SuperElem {
        parse_expr(s, r).unwrap()
    }

    #[test]
    fn own_vectors_have_unit_coordinates() {
        let r = ring();
        let vs = vec![e(&r, "x[1,1]"), e(&r, "x[2,2]*D1^-1"), e(&r, "x[1,2]*x[2,1]")];
        let s = SpanMatrix::from_vectors(&r, &vs, true).unwrap();
        assert_eq!(s.rank(), 3);
        for (i, v) in vs.iter().enumerate() {
            let Membership::InSpan(Some(c)) = s.membership(v).unwrap() else { panic!() };
            for (j, cj) in c.iter().enumerate() {
                assert_eq!(cj.is_one(), i == j);
                assert!(i == j || cj.is_zero());
            }
        }
        let Membership::InSpan(Some(c)) = s.membership(&r.zero()).unwrap() else { panic!() };
        assert!(c.iter().all(Scalar::is_zero));
    }

    #[test]
    fn combination_coordinates() {
        let r = ring();
        let vs = vec![e(&r, "x[1,1] + x[2,2]"), e(&r, "x[1,1] - x[2,2]")];
        let s = SpanMatrix::from_vectors(&r, &vs, true).unwrap();
        let Membership::InSpan(Some(c)) = s.membership(&e(&r, "x[1,1]")).unwrap() else { panic!() };
        let chr = r.characteristic();
        let half = Scalar::one(chr).div(&Scalar::from_i64(chr, 2)).unwrap();
        assert_eq!(c, vec![half.clone(), half]);
    }

    #[test]
    fn non_members_report_residual() {
        let r = ring();
        let s = SpanMatrix::from_vectors(&r, &[e(&r, "x[1,1]")], false).unwrap();
        match s.membership(&e(&r, "x[1,1] + x[2,2]")).unwrap() {
            Membership::NotInSpan { residual } => assert_eq!(residual, e(&r, "x[2,2]")),
            other => panic!("{other:?}"),
        }
        assert!(!s.contains(&e(&r, "D1^-1")).unwrap());
    }

    #[test]
    fn dependent_vectors_do_not_raise_rank() {
        let r = ring();
        let vs = vec![e(&r, "x[1,1]"), e(&r, "2*x[1,1]"), e(&r, "x[2,2]")];
        let s = SpanMatrix::from_vectors(&r, &vs, false).unwrap();
        assert_eq!(s.rank(), 2);
        assert_eq!(s.independent_indices(), &[0, 2]);
    }
}
