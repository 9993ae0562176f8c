//! The generic matrix: block determinants, cofactors, minor identities and the
//! substitution `x ↦ y` expressing coordinates through the big-cell factorization.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::report::{Check, Report};
use crate::superring::{minor_poly, permutations_with_sign, Block, Poly, RawElem, SuperElem, SuperRing};

fn check_even_index(ring: &SuperRing, idx: &[usize]) -> Result<()> {
    let m = ring.m();
    for &i in idx {
        if i == 0 || i > m {
            return Err(Error::IndexOutOfRange(format!("index {i} outside 1..={m}")));
        }
    }
    Ok(())
}

fn elem_of_raw(ring: &SuperRing, raw: &RawElem) -> SuperElem {
    ring.elem(raw.num.clone(), raw.a, raw.b)
}

/// Determinant of the `I11` or `I22` block.
pub fn det_block(ring: &SuperRing, block: Block) -> Result<SuperElem> {
    match block {
        Block::I11 => Ok(ring.d1()),
        Block::I22 => Ok(ring.d2()),
        _ => Err(Error::InvalidArgument(format!("{block} is not a diagonal block"))),
    }
}

/// `(-1)^{u+v}` times the minor of `X11` with row `u` and column `v` removed.
pub fn cofactor(ring: &SuperRing, u: usize, v: usize) -> Result<SuperElem> {
    check_even_index(ring, &[u, v])?;
    Ok(ring.elem(adjugate_polys(ring)[(v - 1) * ring.m() + (u - 1)].clone(), 0, 0))
}

/// Entry `(u, v)` of the adjugate of `X11`, so that `X11^{-1} = adj / D1`.
pub fn adjugate_entry(ring: &SuperRing, u: usize, v: usize) -> Result<SuperElem> {
    check_even_index(ring, &[u, v])?;
    Ok(ring.elem(adjugate_polys(ring)[(u - 1) * ring.m() + (v - 1)].clone(), 0, 0))
}

pub(crate) fn adjugate_polys(ring: &SuperRing) -> &Vec<Poly> {
    ring.0.adjugate.get_or_init(|| {
        let m = ring.m();
        let spec = ring.spec();
        let mut out = Vec::with_capacity(m * m);
        for u in 1..=m {
            for v in 1..=m {
                // adj(u, v) = cofactor(v, u)
                let rows: Vec<usize> = (1..=m).filter(|&r| r != v).collect();
                let cols: Vec<usize> = (1..=m).filter(|&c| c != u).collect();
                let p = minor_poly(spec, &rows, &cols);
                out.push(if (u + v) % 2 == 1 { p.neg() } else { p });
            }
        }
        out
    })
}

/// Minor of `X11` with rows `{u,k}` and columns `{v,j}` removed (unsigned).
pub fn complementary_minor(ring: &SuperRing, rows: (usize, usize), cols: (usize, usize)) -> Result<SuperElem> {
    check_even_index(ring, &[rows.0, rows.1, cols.0, cols.1])?;
    if rows.0 == rows.1 || cols.0 == cols.1 {
        return Err(Error::InvalidArgument("repeated index in complementary minor".into()));
    }
    let m = ring.m();
    let r: Vec<usize> = (1..=m).filter(|&i| i != rows.0 && i != rows.1).collect();
    let c: Vec<usize> = (1..=m).filter(|&i| i != cols.0 && i != cols.1).collect();
    Ok(ring.elem(minor_poly(ring.spec(), &r, &c), 0, 0))
}

fn orientation(a: usize, b: usize) -> i64 {
    if a < b {
        1
    } else {
        -1
    }
}

/// Jacobi's identity for 2×2 minors of the adjugate:
/// `A_uj A_kv − A_uv A_kj = ± D · minor`, with the minor taken in the adjugate
/// reading (rows `v,j` and columns `u,k` removed).
pub fn jacobi_check(ring: &SuperRing, u: usize, j: usize, k: usize, v: usize) -> Result<bool> {
    if ring.m() < 2 || u == k || v == j {
        return Err(Error::InvalidArgument("need m ≥ 2, u ≠ k and v ≠ j".into()));
    }
    let a = |p, q| adjugate_entry(ring, p, q);
    let lhs = &(&a(u, j)? * &a(k, v)?) - &(&a(u, v)? * &a(k, j)?);
    let sign = if (u + j + k + v).is_multiple_of(2) { 1 } else { -1 } * orientation(u, k) * orientation(j, v);
    let rhs = (&ring.d1() * &complementary_minor(ring, (v, j), (u, k))?).scale_i64(sign);
    Ok(lhs == rhs)
}

/// Expansion of an adjugate entry along column `k` of the complementary minors:
/// `A_uj = Σ_{v≠j} ± minor · x_vk`.
pub fn laplace_check(ring: &SuperRing, u: usize, j: usize, k: usize) -> Result<bool> {
    let m = ring.m();
    if m < 2 || u == k {
        return Err(Error::InvalidArgument("need m ≥ 2 and u ≠ k".into()));
    }
    check_even_index(ring, &[u, j, k])?;
    let mut terms = Vec::new();
    for v in (1..=m).filter(|&v| v != j) {
        let sign = if (u + k + v + j).is_multiple_of(2) { 1 } else { -1 } * orientation(u, k) * orientation(j, v);
        let minor = complementary_minor(ring, (v, j), (u, k))?;
        terms.push((&minor * &ring.x(v, k)?).scale_i64(sign));
    }
    Ok(adjugate_entry(ring, u, j)? == ring.sum(&terms))
}

/// `jacobi_check` at every index tuple with `u ≠ k` and `j ≠ v`.
pub fn verify_jacobi(ring: &SuperRing) -> Result<Report> {
    let m = ring.m();
    let mut checks = Vec::new();
    for (u, j, k, v) in iproduct4(m) {
        if u != k && j != v {
            checks.push(Check::flag(format!("jacobi({u},{j},{k},{v})"), jacobi_check(ring, u, j, k, v)?));
        }
    }
    Ok(Report::new(format!("adjugate 2x2 minors, m = {m}"), checks))
}

/// `laplace_check` at every index triple with `u ≠ k`.
pub fn verify_laplace(ring: &SuperRing) -> Result<Report> {
    let m = ring.m();
    let mut checks = Vec::new();
    for (u, j, k, _) in iproduct4(m).filter(|t| t.3 == 1) {
        if u != k {
            checks.push(Check::flag(format!("laplace({u},{j},{k})"), laplace_check(ring, u, j, k)?));
        }
    }
    Ok(Report::new(format!("adjugate expansions, m = {m}"), checks))
}

fn iproduct4(m: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (1..=m).flat_map(move |a| {
        (1..=m).flat_map(move |b| (1..=m).flat_map(move |c| (1..=m).map(move |d| (a, b, c, d))))
    })
}

fn ys(ring: &SuperRing) -> &Vec<RawElem> {
    ring.0.ys.get_or_init(|| {
        let (m, s) = (ring.m(), ring.m() + ring.n());
        let adj = |u: usize, v: usize| ring.elem(adjugate_polys(ring)[(u - 1) * m + (v - 1)].clone(), 0, 0);
        let x = |i: usize, j: usize| ring.x(i, j).expect("index in range");
        let d_inv = ring.d_power(-1, 0);
        let mut out = Vec::with_capacity(s * s);
        for i in 1..=s {
            for j in 1..=s {
                let y = match Block::of(m, i, j) {
                    Block::I11 => x(i, j),
                    Block::I12 => {
                        let t: Vec<SuperElem> = (1..=m).map(|u| &adj(i, u) * &x(u, j)).collect();
                        &ring.sum(&t) * &d_inv
                    }
                    Block::I21 => {
                        let t: Vec<SuperElem> = (1..=m).map(|u| &x(i, u) * &adj(u, j)).collect();
                        &ring.sum(&t) * &d_inv
                    }
                    Block::I22 => {
                        let mut t = Vec::new();
                        for u in 1..=m {
                            for v in 1..=m {
                                t.push(&(&x(i, u) * &adj(u, v)) * &x(v, j));
                            }
                        }
                        &x(i, j) - &(&ring.sum(&t) * &d_inv)
                    }
                };
                let (a, b) = y.denominator();
                out.push(RawElem { num: y.numerator().clone(), a, b });
            }
        }
        out
    })
}

/// The image `y_ij` of the generator `x_ij`.
pub fn phistar_gen(ring: &SuperRing, i: usize, j: usize) -> Result<SuperElem> {
    let s = ring.m() + ring.n();
    if i == 0 || j == 0 || i > s || j > s {
        return Err(Error::IndexOutOfRange(format!("y[{i},{j}] outside 1..={s}")));
    }
    Ok(elem_of_raw(ring, &ys(ring)[(i - 1) * s + (j - 1)]))
}

/// Determinant of the `Y22` block of the `y` matrix.
pub fn det_y22(ring: &SuperRing) -> SuperElem {
    let raw = ring.0.det_y22.get_or_init(|| {
        let (m, n) = (ring.m(), ring.n());
        let y = |i: usize, j: usize| phistar_gen(ring, m + i, m + j).expect("index in range");
        let mut terms = Vec::new();
        for (perm, neg) in permutations_with_sign(n) {
            let mut prod = ring.one();
            for (r, &c) in perm.iter().enumerate() {
                prod = &prod * &y(r + 1, c + 1);
            }
            terms.push(if neg { prod.neg() } else { prod });
        }
        let d = ring.sum(&terms);
        let (a, b) = d.denominator();
        RawElem { num: d.numerator().clone(), a, b }
    });
    elem_of_raw(ring, raw)
}

/// Inverse of `det(Y22)`, the image of `D2^{-1}`.
pub fn det_y22_inverse(ring: &SuperRing) -> SuperElem {
    let raw = ring.0.det_y22_inv.get_or_init(|| {
        let inv = det_y22(ring).invert_even_unit().expect("det(Y22) is a unit");
        let (a, b) = inv.denominator();
        RawElem { num: inv.numerator().clone(), a, b }
    });
    elem_of_raw(ring, raw)
}

/// Algebra-map extension of `x_ij ↦ y_ij` to the even subring generated by
/// the diagonal-block variables and `D1^{-1}`, `D2^{-1}`.
pub fn phistar(ring: &SuperRing, f: &SuperElem) -> Result<SuperElem> {
    if f.ring() != ring {
        let (s, o) = (ring.spec(), f.ring().spec());
        return Err(Error::Dimension(s.m, s.n, o.m, o.n));
    }
    if !f.numerator().is_even_only() {
        return Err(Error::NotAdmissible(f.render()));
    }
    let (m, n) = (ring.m(), ring.n());
    let mut powers: HashMap<(usize, u8), SuperElem> = HashMap::new();
    let mut terms = Vec::with_capacity(f.numerator().len());
    for (mono, c) in f.terms() {
        let mut prod = ring.constant(c.clone());
        for slot in 0..m * m + n * n {
            let e = mono.even_exponent(slot);
            if e == 0 {
                continue;
            }
            let p = powers.entry((slot, e)).or_insert_with(|| {
                let v = crate::VarId::even_from_slot(m, n, slot);
                phistar_gen(ring, v.row(), v.col()).expect("index in range").pow(e as u32)
            });
            prod = &prod * &*p;
        }
        terms.push(prod);
    }
    let mut out = ring.sum(&terms);
    let (a, b) = f.denominator();
    if a > 0 {
        out = &out * &ring.d_power(-(a as i64), 0);
    }
    if b > 0 {
        out = &out * &det_y22_inverse(ring).pow(b);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superring::parse_expr;

    fn ring(m: usize, n: usize) -> SuperRing {
        SuperRing::with(m, n, 0).unwrap()
    }

    #[test]
    fn block_determinants() {
        let r = ring(1, 2);
        assert_eq!(det_block(&r, Block::I11).unwrap(), r.x(1, 1).unwrap());
        assert_eq!(det_block(&r, Block::I22).unwrap(), parse_expr("x[2,2]*x[3,3] - x[2,3]*x[3,2]", &r).unwrap());
        let r = ring(2, 1);
        assert_eq!(det_block(&r, Block::I11).unwrap(), parse_expr("x[1,1]*x[2,2] - x[1,2]*x[2,1]", &r).unwrap());
        assert!(det_block(&r, Block::I12).is_err());
    }

    #[test]
    fn cofactor_examples() {
        assert!(cofactor(&ring(1, 1), 1, 1).unwrap().is_one());
        let r = ring(2, 1);
        assert_eq!(cofactor(&r, 1, 2).unwrap(), r.x(2, 1).unwrap().neg());
        assert!(cofactor(&r, 3, 1).is_err());
    }

    #[test]
    fn cofactor_orthogonality() {
        for m in 1..=4 {
            let r = ring(m, 1);
            for u in 1..=m {
                for w in 1..=m {
                    let t: Vec<SuperElem> =
                        (1..=m).map(|v| &r.x(u, v).unwrap() * &cofactor(&r, w, v).unwrap()).collect();
                    let expected = if u == w { r.d1() } else { r.zero() };
                    assert_eq!(r.sum(&t), expected, "m={m} u={u} w={w}");
                }
            }
        }
    }

    #[test]
    fn complementary_minor_examples() {
        assert!(complementary_minor(&ring(2, 1), (1, 2), (1, 2)).unwrap().is_one());
        let r = ring(3, 1);
        assert_eq!(complementary_minor(&r, (1, 2), (1, 2)).unwrap(), r.x(3, 3).unwrap());
        assert_eq!(complementary_minor(&r, (1, 3), (1, 2)).unwrap(), r.x(2, 3).unwrap());
        assert!(complementary_minor(&r, (1, 1), (1, 2)).is_err());
    }

    #[test]
    fn jacobi_and_laplace_exhaustive() {
        for m in 2..=3 {
            let r = ring(m, 1);
            let j = verify_jacobi(&r).unwrap();
            assert_eq!(j.total(), (m * (m - 1)).pow(2));
            assert!(j.all_pass(), "{j}");
            let l = verify_laplace(&r).unwrap();
            assert_eq!(l.total(), m * m * (m - 1));
            assert!(l.all_pass(), "{l}");
        }
    }

    #[test]
    fn jacobi_and_laplace_small() {
        let r2 = ring(2, 1);
        assert!(jacobi_check(&r2, 1, 2, 2, 1).unwrap());
        assert!(laplace_check(&r2, 1, 1, 2).unwrap());
        let r3 = ring(3, 1);
        assert!(jacobi_check(&r3, 1, 1, 2, 2).unwrap());
        assert!(laplace_check(&r3, 1, 2, 3).unwrap());
    }

    #[test]
    fn gl11_images() {
        let r = ring(1, 1);
        let y = |i, j| phistar_gen(&r, i, j).unwrap();
        assert_eq!(y(1, 1), r.x(1, 1).unwrap());
        assert_eq!(y(1, 2), parse_expr("x[1,2]*D1^-1", &r).unwrap());
        assert_eq!(y(2, 1), parse_expr("x[2,1]*D1^-1", &r).unwrap());
        assert_ne!(y(2, 1), y(1, 2));
        assert_eq!(y(2, 2), parse_expr("x[2,2] - x[2,1]*x[1,2]*D1^-1", &r).unwrap());
        assert_eq!(&y(1, 1) * &y(1, 2), r.x(1, 2).unwrap());
    }

    #[test]
    fn phistar_extension() {
        let r = ring(1, 1);
        let x22 = r.x(2, 2).unwrap();
        let y22 = phistar_gen(&r, 2, 2).unwrap();
        assert_eq!(phistar(&r, &r.x(1, 1).unwrap()).unwrap(), r.x(1, 1).unwrap());
        assert_eq!(phistar(&r, &(&x22 * &x22)).unwrap(), &y22 * &y22);
        let inv = phistar(&r, &r.d_power(0, -1)).unwrap();
        assert!((&inv * &phistar(&r, &x22).unwrap()).is_one());
        assert!(matches!(phistar(&r, &r.x(1, 2).unwrap()), Err(Error::NotAdmissible(_))));
    }

    #[test]
    fn phistar_is_multiplicative() {
        let r = ring(2, 2);
        let f = parse_expr("x[1,2]*x[3,4] + 2*x[2,1]", &r).unwrap();
        let g = parse_expr("x[4,4]^2 - x[1,1]*D2^-1", &r).unwrap();
        let lhs = phistar(&r, &(&f * &g)).unwrap();
        let rhs = &phistar(&r, &f).unwrap() * &phistar(&r, &g).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn y_matrix_parities() {
        let r = ring(2, 1);
        for i in 1..=3 {
            for j in 1..=3 {
                let y = phistar_gen(&r, i, j).unwrap();
                assert_eq!(y.parity(), Some(Block::of(2, i, j).parity()));
            }
        }
    }
}
