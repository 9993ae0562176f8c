//! Expression parser for ring elements.
//!
//! Grammar:
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' ['-'] integer)?
//! atom   := 'x[' i ',' j ']' | 'y[' i ',' j ']' | 'A[' i ',' j ']'
//!         | 'D1' | 'D2' | rational | '(' expr ')'
//! ```
//! Negative exponents are accepted only on `D1` and `D2`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::glsuper;
use crate::scalar::Scalar;

use super::elem::SuperElem;
use super::ring::SuperRing;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a SuperRing,
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax { position, message: message.into() }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(syntax(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(syntax(start, "expected digits"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digit string"))
    }

    fn small(&mut self) -> Result<usize> {
        let start = self.pos;
        let v = self.digits()?;
        usize::try_from(v).map_err(|_| syntax(start, "index too large"))
    }

    fn expr(&mut self) -> Result<SuperElem> {
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
        } else {
            self.eat(b'+');
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<SuperElem> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SuperElem> {
        let (base, is_det) = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let sign_pos = self.pos;
        let negative = self.eat(b'-');
        let start = self.pos;
        let e = self.digits()?;
        let e = u32::try_from(e).map_err(|_| syntax(start, "exponent too large"))?;
        if negative {
            if !is_det {
                return Err(syntax(sign_pos, "negative exponents are allowed only on D1 and D2"));
            }
            return base.pow_i64(-(e as i64));
        }
        Ok(base.pow(e))
    }

    fn index_pair(&mut self) -> Result<(usize, usize)> {
        self.expect(b'[')?;
        let i = self.small()?;
        self.expect(b',')?;
        let j = self.small()?;
        self.expect(b']')?;
        Ok((i, j))
    }

    fn atom(&mut self) -> Result<(SuperElem, bool)> {
        let start = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok((e, false))
            }
            Some(b'x') => {
                self.pos += 1;
                let (i, j) = self.index_pair()?;
                Ok((self.ring.x(i, j)?, false))
            }
            Some(b'y') => {
                self.pos += 1;
                let (i, j) = self.index_pair()?;
                Ok((glsuper::phistar_gen(self.ring, i, j)?, false))
            }
            Some(b'A') => {
                self.pos += 1;
                let (i, j) = self.index_pair()?;
                Ok((glsuper::adjugate_entry(self.ring, i, j)?, false))
            }
            Some(b'D') => {
                self.pos += 1;
                match self.src.get(self.pos) {
                    Some(b'1') => {
                        self.pos += 1;
                        Ok((self.ring.d1(), true))
                    }
                    Some(b'2') => {
                        self.pos += 1;
                        Ok((self.ring.d2(), true))
                    }
                    _ => Err(syntax(self.pos, "expected D1 or D2")),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                let den = if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    self.digits()?
                } else {
                    BigInt::from(1)
                };
                let c = Scalar::from_ratio(self.ring.characteristic(), &num, &den)
                    .map_err(|_| syntax(start, "zero denominator"))?;
                Ok((self.ring.constant(c), false))
            }
            Some(c) => Err(syntax(self.pos, format!("unexpected '{}'", c as char))),
            None => Err(syntax(self.pos, "unexpected end of input")),
        }
    }
}

/// Parse an expression into a canonical element of `ring`.
pub fn parse_expr(text: &str, ring: &SuperRing) -> Result<SuperElem> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(syntax(p.pos, "trailing input"));
    }
    Ok(e)
}
