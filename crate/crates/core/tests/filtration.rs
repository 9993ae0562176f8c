//! Filtration bases and closure on several small weights.

use superfilt_core::filtration::{
    c_leq_basis_truncated, c_level_vectors, c_quotient_basis, gl11_monomial, m_leq_basis, span_of, verify_closure,
    verify_even_stability, verify_quotient_iso_dims, Gl11Kind, SpanMatrix,
};
use superfilt_core::repro::{brute_force_ssyt_count, small_weights};
use superfilt_core::weightcomb::{tilde, SuperWeight};
use superfilt_core::SuperRing;

fn sw(a: &[i64], b: &[i64]) -> SuperWeight {
    SuperWeight::new(a.to_vec(), b.to_vec()).unwrap()
}

#[test]
fn quotient_counts_up_to_size_three() {
    for (m, n) in [(1, 1), (2, 1), (1, 2)] {
        let r = SuperRing::with(m, n, 0).unwrap();
        for lam in small_weights(m, n, 3, &[-1, 2]) {
            let kp = brute_force_ssyt_count(&tilde(&lam.plus).0, m).pow(2);
            let km = brute_force_ssyt_count(&tilde(&lam.minus).0, n).pow(2);
            assert_eq!(c_quotient_basis(&r, &lam).unwrap().len(), (1 << (2 * m * n)) * kp * km, "{lam}");
        }
    }
}

#[test]
fn quotient_independent_for_rank_two_one() {
    let r = SuperRing::with(2, 1, 0).unwrap();
    let rep = verify_quotient_iso_dims(&r, &sw(&[1, 0], &[1]), 2).unwrap();
    assert!(rep.all_pass(), "{rep}");
    assert_eq!(rep.dims["quotient"], 16 * 4);
}

#[test]
fn even_block_example() {
    let r = SuperRing::with(2, 1, 0).unwrap();
    let b = m_leq_basis(&r, &sw(&[1, 0], &[1])).unwrap();
    let elems: Vec<_> = b.iter().map(|v| v.expansion().clone()).collect();
    assert_eq!(SpanMatrix::from_vectors(&r, &elems, false).unwrap().rank(), 4);
}

#[test]
fn closure_when_p_divides_r() {
    let r = SuperRing::with(1, 1, 3).unwrap();
    let rep = verify_closure(&r, &sw(&[2], &[1]), 3).unwrap();
    assert!(rep.all_pass(), "{rep}");
}

#[test]
fn closure_rank_one_two() {
    let r = SuperRing::with(1, 2, 0).unwrap();
    let rep = verify_closure(&r, &sw(&[1], &[1, 0]), 2).unwrap();
    assert!(rep.all_pass(), "{rep}");
}

#[test]
fn even_positions_keep_each_truncation() {
    let r = SuperRing::with(2, 1, 0).unwrap();
    for lmax in 0..=1 {
        let rep = verify_even_stability(&r, &sw(&[1, 0], &[1]), lmax).unwrap();
        assert!(rep.all_pass(), "{rep}");
    }
}

#[test]
fn rank_one_one_levels_are_monomial_families() {
    use Gl11Kind::*;
    let r = SuperRing::with(1, 1, 0).unwrap();
    let lam = (2i64, 1i64);
    for l in 0..3u32 {
        let level = c_level_vectors(&r, &sw(&[lam.0], &[lam.1]), l).unwrap();
        let mu = (lam.0 - l as i64, lam.1 + l as i64);
        let fams: Vec<_> = [A, B, C, D].iter().map(|&k| gl11_monomial(&r, k, mu).unwrap()).collect();
        let a = SpanMatrix::from_vectors(&r, &fams, false).unwrap();
        let b = span_of(&r, &level).unwrap();
        assert_eq!(a.rank(), 4);
        assert_eq!(b.rank(), 4);
        for v in &level {
            assert!(a.contains(v.expansion()).unwrap());
        }
    }
}

#[test]
fn truncated_basis_is_independent_and_nested() {
    let r = SuperRing::with(2, 1, 0).unwrap();
    let lam = sw(&[1, 0], &[1]);
    let b0 = c_leq_basis_truncated(&r, &lam, 0).unwrap();
    let b1 = c_leq_basis_truncated(&r, &lam, 1).unwrap();
    assert_eq!(b0.len(), 64);
    assert_eq!(b1.len(), 64 + 160);
    let s1 = span_of(&r, &b1).unwrap();
    assert!(b0.iter().all(|v| s1.contains(v.expansion()).unwrap()));
}
