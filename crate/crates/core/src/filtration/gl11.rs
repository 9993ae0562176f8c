//! The rank `(1|1)` example: the monomials `A_μ, B_μ, C_μ, D_μ` and the
//! action of the four odd derivations on them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::glsuper::{det_y22_inverse, phistar_gen};
use crate::report::{Check, Report};
use crate::superderive::{derive, Derivation};
use crate::superring::{parse_expr, SuperElem, SuperRing};

/// Which odd factors follow `y11^i y22^j`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Gl11Kind {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Gl11Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

fn require_gl11(ring: &SuperRing) -> Result<()> {
    if (ring.m(), ring.n()) != (1, 1) {
        return Err(Error::Dimension(1, 1, ring.m(), ring.n()));
    }
    Ok(())
}

fn y(ring: &SuperRing, i: usize, j: usize) -> SuperElem {
    phistar_gen(ring, i, j).expect("index in range")
}

/// `y11^i y22^j` times `y12` (B), `y21` (C), `y12 y21` (D) or nothing (A).
pub fn gl11_monomial(ring: &SuperRing, kind: Gl11Kind, mu: (i64, i64)) -> Result<SuperElem> {
    require_gl11(ring)?;
    let (i, j) = mu;
    let y22 = if j >= 0 { y(ring, 2, 2).pow(j as u32) } else { det_y22_inverse(ring).pow((-j) as u32) };
    let base = &ring.d_power(i, 0) * &y22;
    Ok(match kind {
        Gl11Kind::A => base,
        Gl11Kind::B => &base * &y(ring, 1, 2),
        Gl11Kind::C => &base * &y(ring, 2, 1),
        Gl11Kind::D => &(&base * &y(ring, 1, 2)) * &y(ring, 2, 1),
    })
}

fn der(ring: &SuperRing, right: bool, k: usize, l: usize) -> Derivation {
    if right {
        Derivation::right(ring.spec(), k, l).expect("in range")
    } else {
        Derivation::left(ring.spec(), k, l).expect("in range")
    }
}

fn label(right: bool, k: usize, l: usize, arg: &str) -> String {
    if right {
        format!("({arg})_{k}{l}D")
    } else {
        format!("D_{k}{l}({arg})")
    }
}

/// Generator, right side?, k, l, expected derivative.
type GeneratorRow = ((usize, usize), bool, usize, usize, &'static str);

/// The sixteen derivatives of the four `y` generators.
pub fn verify_gl11_generators(ring: &SuperRing) -> Result<Report> {
    require_gl11(ring)?;
    let table: [GeneratorRow; 16] = [
        ((1, 1), true, 1, 2, "y[1,1]*y[1,2]"),
        ((1, 1), true, 2, 1, "0"),
        ((1, 1), false, 2, 1, "y[2,1]*y[1,1]"),
        ((1, 1), false, 1, 2, "0"),
        ((1, 2), true, 1, 2, "0"),
        ((1, 2), true, 2, 1, "1"),
        ((1, 2), false, 2, 1, "D1^-1*y[2,2]"),
        ((1, 2), false, 1, 2, "0"),
        ((2, 1), true, 1, 2, "D1^-1*y[2,2]"),
        ((2, 1), true, 2, 1, "0"),
        ((2, 1), false, 2, 1, "0"),
        ((2, 1), false, 1, 2, "1"),
        ((2, 2), true, 1, 2, "y[2,2]*y[1,2]"),
        ((2, 2), true, 2, 1, "0"),
        ((2, 2), false, 2, 1, "y[2,1]*y[2,2]"),
        ((2, 2), false, 1, 2, "0"),
    ];
    let mut checks = Vec::with_capacity(16);
    for ((i, j), right, k, l, expected) in table {
        let computed = derive(&der(ring, right, k, l), &y(ring, i, j));
        let expected = parse_expr(expected, ring)?;
        checks.push(Check::compare(label(right, k, l, &format!("y{i}{j}")), &expected, &computed));
    }
    Ok(Report::new(format!("generator derivatives, {}", ring.spec()), checks))
}

/// The sixteen derivatives of `A_μ, B_μ, C_μ, D_μ` for each sampled `μ = (i|j)`,
/// with `r = i + j` and `μ − π = (i−1|j+1)`.
pub fn verify_gl11_families(ring: &SuperRing, samples: &[(i64, i64)]) -> Result<Report> {
    use Gl11Kind::*;
    require_gl11(ring)?;
    let mut checks = Vec::with_capacity(16 * samples.len());
    for &(i, j) in samples {
        let mu = (i, j);
        let lower = (i - 1, j + 1);
        let r = ring.scalar(i + j);
        let g = |k: Gl11Kind, w: (i64, i64)| gl11_monomial(ring, k, w);
        let mixed = &g(A, lower)? - &g(D, mu)?.scale(&r);
        let zero = ring.zero();
        // (kind, right?, k, l, expected)
        let table: Vec<(Gl11Kind, bool, usize, usize, SuperElem)> = vec![
            (A, true, 1, 2, g(B, mu)?.scale(&r)),
            (A, true, 2, 1, zero.clone()),
            (A, false, 2, 1, g(C, mu)?.scale(&r)),
            (A, false, 1, 2, zero.clone()),
            (B, true, 1, 2, zero.clone()),
            (B, true, 2, 1, g(A, mu)?),
            (B, false, 2, 1, mixed.clone()),
            (B, false, 1, 2, zero.clone()),
            (C, true, 1, 2, mixed),
            (C, true, 2, 1, zero.clone()),
            (C, false, 2, 1, zero),
            (C, false, 1, 2, g(A, mu)?),
            (D, true, 1, 2, g(B, lower)?),
            (D, true, 2, 1, g(C, mu)?.neg()),
            (D, false, 2, 1, g(C, lower)?),
            (D, false, 1, 2, g(B, mu)?.neg()),
        ];
        for (kind, right, k, l, expected) in table {
            let computed = derive(&der(ring, right, k, l), &g(kind, mu)?);
            let name = format!("mu=({i}|{j}) {}", label(right, k, l, &kind.to_string()));
            checks.push(Check::compare(name, &expected, &computed));
        }
    }
    Ok(Report::new(format!("monomial derivatives, {}", ring.spec()), checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::{SpanMatrix, Membership};

    fn ring(p: u64) -> SuperRing {
        SuperRing::with(1, 1, p).unwrap()
    }

    #[test]
    fn monomial_examples() {
        let r = ring(0);
        assert_eq!(gl11_monomial(&r, Gl11Kind::A, (1, 0)).unwrap(), r.x(1, 1).unwrap());
        assert_eq!(gl11_monomial(&r, Gl11Kind::B, (0, 0)).unwrap(), parse_expr("x[1,2]*D1^-1", &r).unwrap());
        assert_eq!(
            gl11_monomial(&r, Gl11Kind::D, (0, 0)).unwrap(),
            parse_expr("x[1,2]*x[2,1]*D1^-2", &r).unwrap()
        );
        let inv = gl11_monomial(&r, Gl11Kind::A, (0, -1)).unwrap();
        assert!((&inv * &gl11_monomial(&r, Gl11Kind::A, (0, 1)).unwrap()).is_one());
        assert!(gl11_monomial(&SuperRing::with(2, 1, 0).unwrap(), Gl11Kind::A, (0, 0)).is_err());
    }

    #[test]
    fn generator_table() {
        let rep = verify_gl11_generators(&ring(0)).unwrap();
        assert_eq!(rep.total(), 16);
        assert!(rep.all_pass(), "{rep}");
    }

    #[test]
    fn monomial_table() {
        let samples = [(0, 0), (1, 0), (2, 1), (3, -1), (5, -2)];
        for p in [0, 3, 5] {
            let rep = verify_gl11_families(&ring(p), &samples).unwrap();
            assert_eq!(rep.total(), 80);
            assert!(rep.all_pass(), "{rep}");
        }
    }

    #[test]
    fn scalar_vanishes_when_p_divides_r() {
        let r = ring(3);
        let a = gl11_monomial(&r, Gl11Kind::A, (2, 1)).unwrap();
        assert!(derive(&Derivation::right(r.spec(), 1, 2).unwrap(), &a).is_zero());
        let r0 = ring(0);
        let a = gl11_monomial(&r0, Gl11Kind::A, (2, 1)).unwrap();
        let b = gl11_monomial(&r0, Gl11Kind::B, (2, 1)).unwrap();
        assert_eq!(derive(&Derivation::right(r0.spec(), 1, 2).unwrap(), &a), b.scale_i64(3));
    }

    #[test]
    fn mixed_term_coordinates() {
        use Gl11Kind::*;
        let r = ring(0);
        let (mu, lower) = ((2, 1), (1, 2));
        let mut basis = Vec::new();
        for w in [lower, mu] {
            for k in [A, B, C, D] {
                basis.push(gl11_monomial(&r, k, w).unwrap());
            }
        }
        let span = SpanMatrix::from_vectors(&r, &basis, true).unwrap();
        let c = gl11_monomial(&r, C, mu).unwrap();
        let image = derive(&Derivation::right(r.spec(), 1, 2).unwrap(), &c);
        let Membership::InSpan(Some(coords)) = span.membership(&image).unwrap() else { panic!() };
        let expect: Vec<_> = [1, 0, 0, 0, 0, 0, 0, -3].iter().map(|&v| r.scalar(v)).collect();
        assert_eq!(coords, expect);
    }
}
