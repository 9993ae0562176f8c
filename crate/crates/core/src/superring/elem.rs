//! Elements of the localized ring: a numerator over `D1^a D2^b`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::monomial::{SuperMonomial, VarId};
use super::poly::Poly;
use super::ring::SuperRing;

/// An element `num / (D1^a D2^b)` in canonical form.
///
/// Canonical means no stored zero coefficient and no further exact division
/// of the numerator by `D1` (when `a > 0`) or by `D2` (when `b > 0`).
#[derive(Clone)]
pub struct SuperElem {
    ring: SuperRing,
    num: Poly,
    a: u32,
    b: u32,
}

impl PartialEq for SuperElem {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.a == other.a && self.b == other.b && self.num == other.num
    }
}

impl Eq for SuperElem {}

impl Hash for SuperElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.a.hash(state);
        self.b.hash(state);
    }
}

impl fmt::Debug for SuperElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperElem({self})")
    }
}

impl SuperRing {
    pub fn zero(&self) -> SuperElem {
        SuperElem { ring: self.clone(), num: self.zero_poly(), a: 0, b: 0 }
    }

    pub fn one(&self) -> SuperElem {
        self.constant(Scalar::one(self.characteristic()))
    }

    pub fn constant(&self, c: Scalar) -> SuperElem {
        SuperElem::from_parts(self, Poly::term(self.one_mono(), c), 0, 0)
    }

    pub fn int(&self, v: i64) -> SuperElem {
        self.constant(self.scalar(v))
    }

    /// The generator `x[i,j]`.
    pub fn x(&self, i: usize, j: usize) -> Result<SuperElem> {
        let v = self.spec().var(i, j)?;
        Ok(self.var(v))
    }

    pub fn var(&self, v: VarId) -> SuperElem {
        SuperElem { ring: self.clone(), num: Poly::var(self.m(), self.n(), self.characteristic(), v), a: 0, b: 0 }
    }

    pub fn d1(&self) -> SuperElem {
        SuperElem { ring: self.clone(), num: self.d_poly(false).clone(), a: 0, b: 0 }
    }

    pub fn d2(&self) -> SuperElem {
        SuperElem { ring: self.clone(), num: self.d_poly(true).clone(), a: 0, b: 0 }
    }

    /// `D1^e1 · D2^e2` for arbitrary integer exponents.
    pub fn d_power(&self, e1: i64, e2: i64) -> SuperElem {
        let mut num = Poly::one(self.m(), self.n(), self.characteristic());
        let (mut a, mut b) = (0, 0);
        if e1 >= 0 {
            num = num.mul(&self.d_pow(false, e1 as u32));
        } else {
            a = (-e1) as u32;
        }
        if e2 >= 0 {
            num = num.mul(&self.d_pow(true, e2 as u32));
        } else {
            b = (-e2) as u32;
        }
        SuperElem { ring: self.clone(), num, a, b }
    }

    /// Build an element from a numerator and denominator exponents and normalize it.
    pub fn elem(&self, num: Poly, a: u32, b: u32) -> SuperElem {
        SuperElem::from_parts(self, num, a, b)
    }
}

impl SuperElem {
    pub(crate) fn from_parts(ring: &SuperRing, num: Poly, a: u32, b: u32) -> SuperElem {
        let mut e = SuperElem { ring: ring.clone(), num, a, b };
        e.normalize();
        e
    }

    /// Cancel every factor `D1` / `D2` shared by numerator and denominator.
    pub(crate) fn normalize(&mut self) {
        if self.num.is_zero() {
            self.a = 0;
            self.b = 0;
            return;
        }
        while self.a > 0 {
            match self.num.exact_div(self.ring.d_poly(false)) {
                Some(q) => {
                    self.num = q;
                    self.a -= 1;
                }
                None => break,
            }
        }
        while self.b > 0 {
            match self.num.exact_div(self.ring.d_poly(true)) {
                Some(q) => {
                    self.num = q;
                    self.b -= 1;
                }
                None => break,
            }
        }
    }

    pub fn ring(&self) -> &SuperRing {
        &self.ring
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    /// Denominator exponents `(a, b)` of `D1^a D2^b`.
    pub fn denominator(&self) -> (u32, u32) {
        (self.a, self.b)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a == 0 && self.b == 0 && self.num.as_constant().is_some_and(|c| c.is_one())
    }

    /// Parity of a homogeneous element; `None` when parities are mixed.
    pub fn parity(&self) -> Option<u8> {
        self.num.parity()
    }

    fn check_ring(&self, other: &SuperElem) -> Result<()> {
        let (s, o) = (self.ring.spec(), other.ring.spec());
        if s.characteristic != o.characteristic {
            return Err(Error::Characteristic(s.characteristic.value(), o.characteristic.value()));
        }
        if (s.m, s.n) != (o.m, o.n) {
            return Err(Error::Dimension(s.m, s.n, o.m, o.n));
        }
        Ok(())
    }

    /// Numerator over `D1^a D2^b` with `a ≥ self.a`, `b ≥ self.b`.
    pub(crate) fn lifted_numerator(&self, a: u32, b: u32) -> Poly {
        let mut num = self.num.clone();
        if a > self.a {
            num = num.mul(&self.ring.d_pow(false, a - self.a));
        }
        if b > self.b {
            num = num.mul(&self.ring.d_pow(true, b - self.b));
        }
        num
    }

    pub fn try_add(&self, other: &SuperElem) -> Result<SuperElem> {
        self.check_ring(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let (a, b) = (self.a.max(other.a), self.b.max(other.b));
        let mut num = self.lifted_numerator(a, b);
        num.add_assign(&other.lifted_numerator(a, b));
        Ok(SuperElem::from_parts(&self.ring, num, a, b))
    }

    pub fn try_sub(&self, other: &SuperElem) -> Result<SuperElem> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &SuperElem) -> Result<SuperElem> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.ring.zero());
        }
        let num = self.num.mul(&other.num);
        Ok(SuperElem::from_parts(&self.ring, num, self.a + other.a, self.b + other.b))
    }

    pub fn neg(&self) -> SuperElem {
        SuperElem { ring: self.ring.clone(), num: self.num.neg(), a: self.a, b: self.b }
    }

    pub fn scale(&self, s: &Scalar) -> SuperElem {
        SuperElem::from_parts(&self.ring, self.num.scale(s), self.a, self.b)
    }

    pub fn scale_i64(&self, k: i64) -> SuperElem {
        self.scale(&self.ring.scalar(k))
    }

    pub fn pow(&self, e: u32) -> SuperElem {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents require an even unit.
    pub fn pow_i64(&self, e: i64) -> Result<SuperElem> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.invert_even_unit()?.pow((-e) as u32))
        }
    }

    /// Exact quotient by a nonzero polynomial without denominators or odd variables.
    pub fn exact_divide(&self, d: &SuperElem) -> Result<SuperElem> {
        self.check_ring(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if d.a != 0 || d.b != 0 || !d.num.is_even_only() {
            return Err(Error::InvalidArgument("divisor must be an even polynomial".into()));
        }
        let q = self.num.exact_div(&d.num).ok_or(Error::NotDivisible)?;
        Ok(SuperElem::from_parts(&self.ring, q, self.a, self.b))
    }

    /// Inverse of `c · D1^α · D2^β · (1 + ν)` with `ν` nilpotent.
    pub fn invert_even_unit(&self) -> Result<SuperElem> {
        let ring = &self.ring;
        let body = self.num.odd_free_part();
        if body.is_zero() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        let mut rest = body.clone();
        let (mut alpha, mut beta) = (0u32, 0u32);
        while let Some(q) = rest.exact_div(ring.d_poly(false)) {
            if rest.as_constant().is_some() {
                break;
            }
            rest = q;
            alpha += 1;
        }
        while let Some(q) = rest.exact_div(ring.d_poly(true)) {
            if rest.as_constant().is_some() {
                break;
            }
            rest = q;
            beta += 1;
        }
        let c = match rest.as_constant() {
            Some(c) if !c.is_zero() => c,
            _ => return Err(Error::NotAUnit(self.to_string())),
        };
        let c_inv = c.inverse().expect("nonzero constant");
        // ν = (num − body) / body
        let mut nil = self.num.clone();
        nil.add_scaled(&body, &Scalar::from_i64(ring.characteristic(), -1));
        let nu = SuperElem::from_parts(ring, nil.scale(&c_inv), alpha, beta);
        let minus_nu = nu.neg();
        let mut series = ring.one();
        let mut power = ring.one();
        for _ in 0..=2 * ring.m() * ring.n() {
            power = &power * &minus_nu;
            if power.is_zero() {
                break;
            }
            series = &series + &power;
        }
        let e1 = self.a as i64 - alpha as i64;
        let e2 = self.b as i64 - beta as i64;
        Ok(&series * &ring.d_power(e1, e2).scale(&c_inv))
    }

    /// Terms of the numerator.
    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &Scalar)> {
        self.num.terms().iter()
    }

    /// Text form that the expression parser reads back to the same element.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

fn render_monomial(mono: &SuperMonomial) -> String {
    mono.render_factors()
        .iter()
        .map(|(v, e)| if *e > 1 { format!("{v}^{e}") } else { v.to_string() })
        .collect::<Vec<_>>()
        .join("*")
}

fn render_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (mono, c)) in p.terms().iter().rev().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        if mono.is_one() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&render_monomial(mono));
        } else {
            out.push_str(&format!("{mag}*{}", render_monomial(mono)));
        }
    }
    out
}

impl fmt::Display for SuperElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = render_poly(&self.num);
        if self.a == 0 && self.b == 0 || self.num.is_zero() {
            return f.write_str(&body);
        }
        let mut den = String::new();
        if self.a > 0 {
            den.push_str(&format!("*D1^-{}", self.a));
        }
        if self.b > 0 {
            den.push_str(&format!("*D2^-{}", self.b));
        }
        if self.num.len() == 1 {
            write!(f, "{body}{den}")
        } else {
            write!(f, "({body}){den}")
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $call:ident) => {
        impl $tr<&SuperElem> for &SuperElem {
            type Output = SuperElem;
            fn $method(self, rhs: &SuperElem) -> SuperElem {
                self.$call(rhs).expect("operands from the same ring")
            }
        }
        impl $tr<SuperElem> for SuperElem {
            type Output = SuperElem;
            fn $method(self, rhs: SuperElem) -> SuperElem {
                self.$call(&rhs).expect("operands from the same ring")
            }
        }
        impl $tr<&SuperElem> for SuperElem {
            type Output = SuperElem;
            fn $method(self, rhs: &SuperElem) -> SuperElem {
                self.$call(rhs).expect("operands from the same ring")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &SuperElem {
    type Output = SuperElem;
    fn neg(self) -> SuperElem {
        SuperElem::neg(self)
    }
}

impl Neg for SuperElem {
    type Output = SuperElem;
    fn neg(self) -> SuperElem {
        SuperElem::neg(&self)
    }
}
