//! Left and right superderivations and checks of their action on the `y` coordinates.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::glsuper::{adjugate_entry, phistar_gen};
use crate::report::{BlockSummary, Check, Report, TableReport};
use crate::superring::{mono_mul_unchecked, Block, Poly, RingSpec, SuperElem, SuperMonomial, SuperRing, VarId};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// A superderivation: `Right` is `(x_uv) ↦ δ_vk x_ul`, `Left` is `x_uv ↦ δ_lu x_kv`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Derivation {
    side: Side,
    k: usize,
    l: usize,
    block: Block,
}

impl Derivation {
    pub fn new(spec: &RingSpec, side: Side, k: usize, l: usize) -> Result<Derivation> {
        let s = spec.size();
        if k == 0 || l == 0 || k > s || l > s {
            return Err(Error::IndexOutOfRange(format!("position ({k},{l}) outside 1..={s}")));
        }
        Ok(Derivation { side, k, l, block: Block::of(spec.m, k, l) })
    }

    pub fn left(spec: &RingSpec, k: usize, l: usize) -> Result<Derivation> {
        Derivation::new(spec, Side::Left, k, l)
    }

    pub fn right(spec: &RingSpec, k: usize, l: usize) -> Result<Derivation> {
        Derivation::new(spec, Side::Right, k, l)
    }

    /// Every left and right derivation of the ring.
    pub fn all(spec: &RingSpec) -> Vec<Derivation> {
        let s = spec.size();
        let mut out = Vec::with_capacity(2 * s * s);
        for side in [Side::Left, Side::Right] {
            for k in 1..=s {
                for l in 1..=s {
                    out.push(Derivation::new(spec, side, k, l).expect("in range"));
                }
            }
        }
        out
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn position(&self) -> (usize, usize) {
        (self.k, self.l)
    }

    pub fn block(&self) -> Block {
        self.block
    }

    pub fn parity(&self) -> u8 {
        self.block.parity()
    }

    /// Image of one variable, as a variable or zero.
    fn image_var(&self, m: usize, n: usize, v: VarId) -> Option<VarId> {
        let (u, w) = (v.row(), v.col());
        match self.side {
            Side::Right if w == self.k => Some(VarId::new(m, n, u, self.l).expect("in range")),
            Side::Left if u == self.l => Some(VarId::new(m, n, self.k, w).expect("in range")),
            _ => None,
        }
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.side, self.k, self.l)
    }
}

/// Image of a single generator.
pub fn derive_gen(ring: &SuperRing, d: &Derivation, v: VarId) -> SuperElem {
    match d.image_var(ring.m(), ring.n(), v) {
        Some(w) => ring.var(w),
        None => ring.zero(),
    }
}

/// Apply `d` to a denominator-free polynomial by the signed Leibniz rule,
/// reading each monomial as its even factors followed by its odd factors in
/// canonical order.
pub fn derive_poly(d: &Derivation, p: &Poly) -> Poly {
    let (m, n) = p.dims();
    let mut out = Poly::zero(m, n, p.characteristic());
    for (mono, c) in p.terms() {
        derive_monomial(d, m, n, mono, |neg, prod, mult| {
            let mut v = c.mul_i64(mult as i64);
            if neg {
                v = v.neg();
            }
            out.add_term(prod, v);
        });
    }
    out
}

fn derive_monomial(d: &Derivation, m: usize, n: usize, mono: &SuperMonomial, mut emit: impl FnMut(bool, SuperMonomial, u32)) {
    let dodd = d.parity() == 1;
    let odd = mono.odd_mask();
    let total_odd = odd.count_ones();
    for slot in 0..m * m + n * n {
        let e = mono.even_exponent(slot);
        if e == 0 {
            continue;
        }
        let v = VarId::even_from_slot(m, n, slot);
        let Some(img) = d.image_var(m, n, v) else { continue };
        let rest = mono.with_even_exponent(slot, e - 1);
        // The even factor moves to the front; its image then sits before every odd factor.
        let Some((neg, prod)) = mono_mul_unchecked(&SuperMonomial::var(m, n, img), &rest) else { continue };
        let sign = match d.side {
            Side::Left => false,
            Side::Right => dodd && total_odd % 2 == 1,
        };
        emit(neg ^ sign, prod, e as u32);
    }
    let mut bits = odd;
    let mut before = 0u32;
    while bits != 0 {
        let b = bits.trailing_zeros();
        bits &= bits - 1;
        let v = VarId::odd_from_bit(m, n, b as usize);
        let after = total_odd - before - 1;
        if let Some(img) = d.image_var(m, n, v) {
            let lower = odd & ((1u64 << b) - 1);
            let upper = odd & !((1u64 << b) | ((1u64 << b) - 1));
            let prefix = mono.with_odd_mask(lower);
            let suffix = SuperMonomial::one(m, n).with_odd_mask(upper);
            if let Some((n1, p1)) = mono_mul_unchecked(&prefix, &SuperMonomial::var(m, n, img)) {
                if let Some((n2, p2)) = mono_mul_unchecked(&p1, &suffix) {
                    let sign = match d.side {
                        Side::Left => dodd && before % 2 == 1,
                        Side::Right => dodd && after % 2 == 1,
                    };
                    emit(n1 ^ n2 ^ sign, p2, 1);
                }
            }
        }
        before += 1;
    }
}

/// Apply `d` to an element, using the quotient rule on the `D1^a D2^b` denominator.
pub fn derive(d: &Derivation, f: &SuperElem) -> SuperElem {
    let ring = f.ring();
    let num = f.numerator();
    let (a, b) = f.denominator();
    let mut parts = vec![ring.elem(derive_poly(d, num), a, b)];
    for (second, e) in [(false, a), (true, b)] {
        if e == 0 {
            continue;
        }
        let dd = derive_poly(d, ring.d_poly(second));
        if dd.is_zero() {
            continue;
        }
        let prod = match d.side {
            Side::Right => num.mul(&dd),
            Side::Left => dd.mul(num),
        };
        let (na, nb) = if second { (a, b + 1) } else { (a + 1, b) };
        parts.push(ring.elem(prod.scale(&ring.scalar(-(e as i64))), na, nb));
    }
    ring.sum(&parts)
}

/// Apply a sequence of derivations, first element first.
pub fn derive_seq(ds: &[Derivation], f: &SuperElem) -> SuperElem {
    ds.iter().fold(f.clone(), |acc, d| derive(d, &acc))
}

fn delta(a: usize, b: usize) -> bool {
    a == b
}

struct Ys<'a> {
    ring: &'a SuperRing,
}

impl Ys<'_> {
    fn y(&self, i: usize, j: usize) -> SuperElem {
        phistar_gen(self.ring, i, j).expect("index in range")
    }

    fn adj_over_d(&self, u: usize, v: usize) -> SuperElem {
        &adjugate_entry(self.ring, u, v).expect("index in range") * &self.ring.d_power(-1, 0)
    }

    fn when(&self, cond: bool, e: impl FnOnce() -> SuperElem) -> SuperElem {
        if cond {
            e()
        } else {
            self.ring.zero()
        }
    }
}

/// Table value for the right derivation `(y_ij)_{kl}D`.
pub fn right_table_entry(ring: &SuperRing, i: usize, j: usize, k: usize, l: usize) -> SuperElem {
    let m = ring.m();
    let t = Ys { ring };
    use Block::*;
    match (Block::of(m, i, j), Block::of(m, k, l)) {
        (I11, I11) => t.when(delta(j, k), || t.y(i, l)),
        (I11, I12) => t.when(delta(j, k), || {
            let terms: Vec<SuperElem> = (1..=m).map(|u| &t.y(i, u) * &t.y(u, l)).collect();
            ring.sum(&terms)
        }),
        (I12, I11) => t.when(!delta(k, i) && delta(i, l), || t.y(k, j).neg()),
        (I12, I12) => &t.y(i, l) * &t.y(k, j),
        (I12, I21) => t.when(delta(j, k) && delta(i, l), || ring.one()),
        (I12, I22) => t.when(delta(j, k), || t.y(i, l)),
        (I21, I12) => &t.y(i, l) * &t.adj_over_d(k, j),
        (I22, I12) => &t.y(i, l) * &t.y(k, j),
        (I22, I22) => t.when(delta(j, k), || t.y(i, l)),
        _ => ring.zero(),
    }
}

/// Table value for the left derivation `D_kl(y_ij)`.
pub fn left_table_entry(ring: &SuperRing, i: usize, j: usize, k: usize, l: usize) -> SuperElem {
    let m = ring.m();
    let t = Ys { ring };
    use Block::*;
    match (Block::of(m, i, j), Block::of(m, k, l)) {
        (I11, I11) => t.when(delta(i, l), || t.y(k, j)),
        (I11, I21) => t.when(delta(i, l), || {
            let terms: Vec<SuperElem> = (1..=m).map(|u| &t.y(k, u) * &t.y(u, j)).collect();
            ring.sum(&terms)
        }),
        (I21, I11) => t.when(!delta(l, j) && delta(k, j), || t.y(i, l).neg()),
        // Odd factors in the order y_il y_kj.
        (I21, I21) => &t.y(i, l) * &t.y(k, j),
        (I21, I12) => t.when(delta(i, l) && delta(j, k), || ring.one()),
        (I21, I22) => t.when(delta(i, l), || t.y(k, j)),
        (I12, I21) => &t.y(k, j) * &t.adj_over_d(i, l),
        (I22, I21) => &t.y(k, j) * &t.y(i, l),
        (I22, I22) => t.when(delta(i, l), || t.y(k, j)),
        _ => ring.zero(),
    }
}

const BLOCKS: [Block; 4] = [Block::I11, Block::I12, Block::I21, Block::I22];

fn verify_table(ring: &SuperRing, side: Side) -> TableReport {
    let spec = *ring.spec();
    let s = spec.size();
    let mut cases = Vec::new();
    for i in 1..=s {
        for j in 1..=s {
            for k in 1..=s {
                for l in 1..=s {
                    if k != l {
                        cases.push((i, j, k, l));
                    }
                }
            }
        }
    }
    let checks: Vec<(Block, Block, Check)> = cases
        .par_iter()
        .map(|&(i, j, k, l)| {
            let d = Derivation::new(&spec, side, k, l).expect("in range");
            let y = phistar_gen(ring, i, j).expect("in range");
            let computed = derive(&d, &y);
            let expected = match side {
                Side::Right => right_table_entry(ring, i, j, k, l),
                Side::Left => left_table_entry(ring, i, j, k, l),
            };
            let pass = computed == expected;
            let check = Check {
                name: format!("y[{i},{j}] {d}"),
                expected: Some(expected.render()),
                computed: Some(computed.render()),
                pass,
            };
            (Block::of(spec.m, i, j), Block::of(spec.m, k, l), check)
        })
        .collect();
    let mut blocks = Vec::new();
    for rb in BLOCKS {
        for cb in BLOCKS {
            let cell: Vec<&Check> = checks.iter().filter(|(r, c, _)| *r == rb && *c == cb).map(|(_, _, ch)| ch).collect();
            blocks.push(BlockSummary {
                row_block: rb,
                col_block: cb,
                instances: cell.len(),
                passed: cell.iter().filter(|c| c.pass).count(),
            });
        }
    }
    let title = match side {
        Side::Right => format!("right derivations (y_ij)_kl D on {spec}"),
        Side::Left => format!("left derivations D_kl(y_ij) on {spec}"),
    };
    TableReport { title, spec, blocks, checks: checks.into_iter().map(|(_, _, c)| c).collect() }
}

/// Compare every `(y_ij)_{kl}D`, `k ≠ l`, with the closed-form table.
pub fn verify_right_table(ring: &SuperRing) -> TableReport {
    verify_table(ring, Side::Right)
}

/// Compare every `D_kl(y_ij)`, `k ≠ l`, with the closed-form table.
pub fn verify_left_table(ring: &SuperRing) -> TableReport {
    verify_table(ring, Side::Left)
}

/// For `(i,j) ∈ I21` and `(k,l) ∈ I12`: `(y_ij)_{kl}D = A_kj y_il / D1`.
pub fn verify_odd_mixed_formula(ring: &SuperRing) -> Report {
    let spec = *ring.spec();
    let t = Ys { ring };
    let mut cases = Vec::new();
    for (i, j) in spec.block_positions(Block::I21) {
        for (k, l) in spec.block_positions(Block::I12) {
            cases.push((i, j, k, l));
        }
    }
    let checks = cases
        .par_iter()
        .map(|&(i, j, k, l)| {
            let d = Derivation::right(&spec, k, l).expect("in range");
            let computed = derive(&d, &t.y(i, j));
            let expected = &t.adj_over_d(k, j) * &t.y(i, l);
            Check::compare(format!("y[{i},{j}] {d}"), &expected, &computed)
        })
        .collect();
    Report::new(format!("odd-odd mixed formula on {spec}"), checks)
}

/// Applying the same off-diagonal derivation twice annihilates every `y_ij`.
pub fn verify_divided_powers(ring: &SuperRing) -> Report {
    let spec = *ring.spec();
    let s = spec.size();
    let mut cases = Vec::new();
    for side in [Side::Left, Side::Right] {
        for i in 1..=s {
            for j in 1..=s {
                for k in 1..=s {
                    for l in (1..=s).filter(|&l| l != k) {
                        cases.push((side, i, j, k, l));
                    }
                }
            }
        }
    }
    let checks = cases
        .par_iter()
        .map(|&(side, i, j, k, l)| {
            let d = Derivation::new(&spec, side, k, l).expect("in range");
            let y = phistar_gen(ring, i, j).expect("in range");
            let twice = derive(&d, &derive(&d, &y));
            Check::compare(format!("y[{i},{j}] {d}^2"), &ring.zero(), &twice)
        })
        .collect();
    Report::new(format!("second powers of derivations on {spec}"), checks)
}

/// Derivatives of `D1`: zero at even off-diagonal positions, `D1·y_kl` for the
/// right derivation at `I12` and the left derivation at `I21`, zero for the
/// remaining odd cases.
pub fn verify_det_derivative(ring: &SuperRing) -> Report {
    let spec = *ring.spec();
    let s = spec.size();
    let d1 = ring.d1();
    let mut checks = Vec::new();
    for side in [Side::Left, Side::Right] {
        for k in 1..=s {
            for l in 1..=s {
                let block = Block::of(spec.m, k, l);
                if !block.is_odd() && k == l {
                    continue;
                }
                let d = Derivation::new(&spec, side, k, l).expect("in range");
                let expected = match (side, block) {
                    (Side::Right, Block::I12) | (Side::Left, Block::I21) => {
                        &d1 * &phistar_gen(ring, k, l).expect("in range")
                    }
                    _ => ring.zero(),
                };
                checks.push(Check::compare(format!("D1 {d}"), &expected, &derive(&d, &d1)));
            }
        }
    }
    Report::new(format!("derivatives of D1 on {spec}"), checks)
}
