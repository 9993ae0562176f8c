//! Variables and signed monomials of the supercommutative polynomial ring.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Maximum number of even variables (`m² + n²`).
pub const MAX_EVEN_VARS: usize = 32;
/// Maximum number of odd variables (`2mn`).
pub const MAX_ODD_VARS: usize = 64;

/// Position of an index pair in the block decomposition of the generic matrix.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Block {
    I11,
    I12,
    I21,
    I22,
}

impl Block {
    pub fn of(m: usize, i: usize, j: usize) -> Block {
        match (i <= m, j <= m) {
            (true, true) => Block::I11,
            (true, false) => Block::I12,
            (false, true) => Block::I21,
            (false, false) => Block::I22,
        }
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Block::I12 | Block::I21)
    }

    pub fn parity(self) -> u8 {
        self.is_odd() as u8
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Block::I11 => "I11",
            Block::I12 => "I12",
            Block::I21 => "I21",
            Block::I22 => "I22",
        };
        f.write_str(s)
    }
}

/// A generator `x[i,j]` of the ring, 1-based, with its storage slot.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId {
    row: u8,
    col: u8,
    block: Block,
    slot: u8,
}

impl VarId {
    pub fn new(m: usize, n: usize, i: usize, j: usize) -> Result<VarId> {
        let s = m + n;
        if i == 0 || j == 0 || i > s || j > s {
            return Err(Error::IndexOutOfRange(format!("x[{i},{j}] outside 1..={s}")));
        }
        let block = Block::of(m, i, j);
        let slot = match block {
            Block::I11 => (i - 1) * m + (j - 1),
            Block::I22 => m * m + (i - m - 1) * n + (j - m - 1),
            Block::I12 => (i - 1) * n + (j - m - 1),
            Block::I21 => m * n + (i - m - 1) * m + (j - 1),
        };
        Ok(VarId { row: i as u8, col: j as u8, block, slot: slot as u8 })
    }

    pub fn row(self) -> usize {
        self.row as usize
    }

    pub fn col(self) -> usize {
        self.col as usize
    }

    pub fn block(self) -> Block {
        self.block
    }

    pub fn parity(self) -> u8 {
        self.block.parity()
    }

    /// Even exponent slot or odd bit index, depending on parity.
    pub fn slot(self) -> usize {
        self.slot as usize
    }

    pub fn even_from_slot(m: usize, n: usize, slot: usize) -> VarId {
        let (i, j) = if slot < m * m {
            (slot / m + 1, slot % m + 1)
        } else {
            let s = slot - m * m;
            (m + s / n + 1, m + s % n + 1)
        };
        VarId::new(m, n, i, j).expect("valid slot")
    }

    pub fn odd_from_bit(m: usize, n: usize, bit: usize) -> VarId {
        let (i, j) = if bit < m * n {
            (bit / n + 1, m + bit % n + 1)
        } else {
            let s = bit - m * n;
            (m + s / m + 1, s % m + 1)
        };
        VarId::new(m, n, i, j).expect("valid bit")
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.row, self.col)
    }
}

/// A monomial: even exponents plus a set of odd variables kept in canonical order.
///
/// The odd part is a bitmask; bit order is the canonical odd order
/// (I12 before I21, row-major within each block).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperMonomial {
    m: u8,
    n: u8,
    even: [u8; MAX_EVEN_VARS],
    odd: u64,
}

impl SuperMonomial {
    pub fn one(m: usize, n: usize) -> SuperMonomial {
        SuperMonomial { m: m as u8, n: n as u8, even: [0; MAX_EVEN_VARS], odd: 0 }
    }

    pub fn var(m: usize, n: usize, v: VarId) -> SuperMonomial {
        let mut mono = SuperMonomial::one(m, n);
        if v.block.is_odd() {
            mono.odd = 1 << v.slot;
        } else {
            mono.even[v.slot as usize] = 1;
        }
        mono
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.m as usize, self.n as usize)
    }

    pub fn is_one(&self) -> bool {
        self.odd == 0 && self.even.iter().all(|&e| e == 0)
    }

    pub fn odd_mask(&self) -> u64 {
        self.odd
    }

    pub fn even_exponents(&self) -> &[u8; MAX_EVEN_VARS] {
        &self.even
    }

    pub fn even_exponent(&self, slot: usize) -> u8 {
        self.even[slot]
    }

    pub fn parity(&self) -> u8 {
        (self.odd.count_ones() % 2) as u8
    }

    pub fn degree(&self) -> u32 {
        self.even.iter().map(|&e| e as u32).sum::<u32>() + self.odd.count_ones()
    }

    /// Whether `other` divides `self` as an even monomial (odd parts must match).
    pub fn even_divisible_by(&self, other: &SuperMonomial) -> bool {
        self.even.iter().zip(other.even.iter()).all(|(a, b)| a >= b)
    }

    /// `self / other` on even parts, keeping the odd part of `self`.
    pub fn even_quotient(&self, other: &SuperMonomial) -> SuperMonomial {
        let mut q = *self;
        for (a, b) in q.even.iter_mut().zip(other.even.iter()) {
            *a -= b;
        }
        q
    }

    pub fn with_even_exponent(mut self, slot: usize, e: u8) -> SuperMonomial {
        self.even[slot] = e;
        self
    }

    pub fn with_odd_mask(mut self, odd: u64) -> SuperMonomial {
        self.odd = odd;
        self
    }

    /// Variables with exponents, even ones first by slot, then odd ones in canonical order.
    pub fn factors(&self) -> Vec<(VarId, u32)> {
        let (m, n) = self.dims();
        let mut out = Vec::new();
        for slot in 0..m * m + n * n {
            if self.even[slot] > 0 {
                out.push((VarId::even_from_slot(m, n, slot), self.even[slot] as u32));
            }
        }
        let mut bits = self.odd;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            out.push((VarId::odd_from_bit(m, n, b), 1));
            bits &= bits - 1;
        }
        out
    }

    /// Variables in rendering order: row-major over the whole matrix for even
    /// variables, canonical order for odd ones, evens before odds.
    pub fn render_factors(&self) -> Vec<(VarId, u32)> {
        let mut f = self.factors();
        let split = f.iter().position(|(v, _)| v.block.is_odd()).unwrap_or(f.len());
        f[..split].sort_by_key(|(v, _)| (v.row, v.col));
        f
    }
}

/// Sign of concatenating two odd sets: the parity of inversions between them.
pub fn odd_merge_negates(left: u64, right: u64) -> bool {
    let mut inv = 0u32;
    let mut bits = right;
    while bits != 0 {
        let b = bits.trailing_zeros();
        if b < 63 {
            inv += (left >> (b + 1)).count_ones();
        }
        bits &= bits - 1;
    }
    inv % 2 == 1
}

/// Product of two monomials: `None` when an odd variable repeats, otherwise
/// `(negated, product)`.
pub fn mono_mul_unchecked(u: &SuperMonomial, v: &SuperMonomial) -> Option<(bool, SuperMonomial)> {
    if u.odd & v.odd != 0 {
        return None;
    }
    let mut p = *u;
    for (a, b) in p.even.iter_mut().zip(v.even.iter()) {
        *a = a.checked_add(*b).expect("exponent overflow");
    }
    p.odd = u.odd | v.odd;
    Some((odd_merge_negates(u.odd, v.odd), p))
}

/// Checked product: fails when the monomials belong to different rings.
pub fn mono_mul(u: &SuperMonomial, v: &SuperMonomial) -> Result<Option<(bool, SuperMonomial)>> {
    if u.dims() != v.dims() {
        let (a, b) = u.dims();
        let (c, d) = v.dims();
        return Err(Error::Dimension(a, b, c, d));
    }
    Ok(mono_mul_unchecked(u, v))
}
