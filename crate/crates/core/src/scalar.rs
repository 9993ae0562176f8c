//! Coefficients: exact rationals or residues modulo a prime.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Characteristic of the coefficient field: `0` for ℚ, otherwise a prime `p < 2^32`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Characteristic(u64);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    pub fn new(p: u64) -> Result<Self> {
        if p == 0 {
            return Ok(Characteristic(0));
        }
        if p >= 1 << 32 {
            return Err(Error::InvalidRing(format!("characteristic {p} must be below 2^32")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("characteristic {p} is not prime")));
        }
        Ok(Characteristic(p))
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of ℚ or of 𝔽_p.
///
/// Rationals are kept reduced with a positive denominator (guaranteed by
/// `BigRational`); residues lie in `[0, p)`. Mixing the two panics: the ring
/// layer rejects characteristic mismatches before any coefficient meets another.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn zero(chr: Characteristic) -> Scalar {
        Scalar::from_i64(chr, 0)
    }

    pub fn one(chr: Characteristic) -> Scalar {
        Scalar::from_i64(chr, 1)
    }

    pub fn from_i64(chr: Characteristic, v: i64) -> Scalar {
        if chr.is_zero() {
            Scalar::Rational(BigRational::from_integer(BigInt::from(v)))
        } else {
            let p = chr.0 as i128;
            let r = (v as i128).rem_euclid(p) as u64;
            Scalar::Modular { value: r, modulus: chr.0 }
        }
    }

    pub fn from_bigint(chr: Characteristic, v: &BigInt) -> Scalar {
        if chr.is_zero() {
            Scalar::Rational(BigRational::from_integer(v.clone()))
        } else {
            let p = BigInt::from(chr.0);
            let r = v.mod_floor(&p);
            Scalar::Modular { value: r.try_into().expect("residue fits"), modulus: chr.0 }
        }
    }

    /// `num / den`; fails when `den` vanishes in the field.
    pub fn from_ratio(chr: Characteristic, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if chr.is_zero() {
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone())))
        } else {
            let d = Scalar::from_bigint(chr, den);
            let inv = d.inverse().ok_or(Error::DivisionByZero)?;
            Ok(Scalar::from_bigint(chr, num).mul(&inv))
        }
    }

    pub fn characteristic(&self) -> Characteristic {
        match self {
            Scalar::Rational(_) => Characteristic(0),
            Scalar::Modular { modulus, .. } => Characteristic(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed characteristics");
                Scalar::Modular { value: (a + b) % p, modulus: *p }
            }
            _ => panic!("mixed characteristics"),
        }
    }

    pub fn add_assign(&mut self, other: &Scalar) {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed characteristics");
                *a = (*a + b) % *p;
            }
            _ => panic!("mixed characteristics"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => {
                Scalar::Modular { value: (modulus - value) % modulus, modulus: *modulus }
            }
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed characteristics");
                Scalar::Modular { value: a * b % p, modulus: *p }
            }
            _ => panic!("mixed characteristics"),
        }
    }

    pub fn mul_i64(&self, k: i64) -> Scalar {
        self.mul(&Scalar::from_i64(self.characteristic(), k))
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Rational(a) => Some(Scalar::Rational(a.recip())),
            Scalar::Modular { value, modulus } => {
                Some(Scalar::Modular { value: pow_mod(*value, modulus - 2, *modulus), modulus: *modulus })
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inverse().ok_or(Error::DivisionByZero)?))
    }

    /// Sign for rendering: rationals report their sign, residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(a) => a.is_negative(),
            Scalar::Modular { .. } => false,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(a.abs()),
            m => m.clone(),
        }
    }

    /// The value as a rational when it is one (characteristic zero only).
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(a) => Some(a),
            Scalar::Modular { .. } => None,
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(a) => {
                if a.is_integer() {
                    write!(f, "{}", a.numer())
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let q = Characteristic::ZERO;
        let a = Scalar::from_ratio(q, &BigInt::from(6), &BigInt::from(-4)).unwrap();
        assert_eq!(a.to_string(), "-3/2");
        let b = a.add(&Scalar::from_ratio(q, &BigInt::from(1), &BigInt::from(2)).unwrap());
        assert_eq!(b, Scalar::from_i64(q, -1));
    }

    #[test]
    fn residues_in_range() {
        let p = Characteristic::new(7).unwrap();
        let a = Scalar::from_i64(p, -1);
        assert_eq!(a, Scalar::Modular { value: 6, modulus: 7 });
        assert_eq!(a.inverse().unwrap(), a);
        assert!(Scalar::from_i64(p, 14).is_zero());
        assert_eq!(Scalar::from_i64(p, 3).mul(&Scalar::from_i64(p, 5)), Scalar::from_i64(p, 1));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Characteristic::new(9).is_err());
        assert!(Characteristic::new(3).is_ok());
    }

    #[test]
    #[should_panic(expected = "mixed characteristics")]
    fn mixing_panics() {
        let _ = Scalar::from_i64(Characteristic::ZERO, 1).add(&Scalar::from_i64(Characteristic::new(3).unwrap(), 1));
    }
}
