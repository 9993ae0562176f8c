#![allow(dead_code)]

use proptest::prelude::*;
use superfilt_core::{SuperElem, SuperRing};

/// Raw description of a homogeneous element: terms of coefficient, even
/// positions, odd positions, and a power of `D1` in the denominator.
#[derive(Clone, Debug)]
pub struct RawElem {
    pub terms: Vec<(i64, Vec<usize>, Vec<usize>)>,
    pub denom: i64,
}

pub fn even_positions(r: &SuperRing) -> Vec<(usize, usize)> {
    let (m, s) = (r.m(), r.m() + r.n());
    let mut v = Vec::new();
    for i in 1..=s {
        for j in 1..=s {
            if (i <= m) == (j <= m) {
                v.push((i, j));
            }
        }
    }
    v
}

pub fn odd_positions(r: &SuperRing) -> Vec<(usize, usize)> {
    let (m, s) = (r.m(), r.m() + r.n());
    let mut v = Vec::new();
    for i in 1..=s {
        for j in 1..=s {
            if (i <= m) != (j <= m) {
                v.push((i, j));
            }
        }
    }
    v
}

/// Homogeneous element of the given parity.
pub fn raw_elem(parity: usize) -> impl Strategy<Value = RawElem> {
    let term = (
        -3i64..=3,
        prop::collection::vec(0usize..16, 0..3),
        prop::sample::select(vec![parity, parity + 2]).prop_flat_map(|k| prop::collection::vec(0usize..16, k)),
    );
    (prop::collection::vec(term, 1..4), 0i64..2).prop_map(|(terms, denom)| RawElem { terms, denom })
}

pub fn build(r: &SuperRing, raw: &RawElem) -> SuperElem {
    let ev = even_positions(r);
    let od = odd_positions(r);
    let mut out = r.zero();
    for (c, evens, odds) in &raw.terms {
        let mut t = r.int(*c);
        for &e in evens {
            let (i, j) = ev[e % ev.len()];
            t = &t * &r.x(i, j).unwrap();
        }
        for &o in odds {
            let (i, j) = od[o % od.len()];
            t = &t * &r.x(i, j).unwrap();
        }
        out = &out + &t;
    }
    &out * &r.d_power(-raw.denom, 0)
}

pub fn ring21() -> SuperRing {
    SuperRing::with(2, 1, 0).unwrap()
}
