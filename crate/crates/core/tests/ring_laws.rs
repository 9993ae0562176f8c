//! Algebraic laws of the localized supercommutative ring on random elements.

mod common;

use common::{build, raw_elem, ring21};
use proptest::prelude::*;
use superfilt_core::{parse_expr, SuperRing};

fn sign(a: usize, b: usize) -> i64 {
    if a * b % 2 == 1 {
        -1
    } else {
        1
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn supercommutative((pf, pg, a, b) in (0usize..2, 0usize..2).prop_flat_map(|(pf, pg)| (Just(pf), Just(pg), raw_elem(pf), raw_elem(pg)))) {
        let r = ring21();
        let (f, g) = (build(&r, &a), build(&r, &b));
        prop_assert_eq!(&f * &g, (&g * &f).scale_i64(sign(pf, pg)));
    }

    #[test]
    fn associative_and_distributive(a in raw_elem(0), b in raw_elem(1), c in raw_elem(1)) {
        let r = ring21();
        let (f, g, h) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&g + &h) * &f, &(&g * &f) + &(&h * &f));
    }

    #[test]
    fn odd_elements_square_to_zero(a in raw_elem(1)) {
        let r = ring21();
        let f = build(&r, &a);
        prop_assert!((&f * &f).is_zero());
    }

    #[test]
    fn normalization_is_canonical(a in raw_elem(0), k in 0u32..3) {
        let r = ring21();
        let f = build(&r, &a);
        let up = &(&f * &r.d1().pow(k)) * &r.d_power(-(k as i64), 0);
        prop_assert_eq!(&up, &f);
        let (x, y) = up.denominator();
        prop_assert_eq!(r.elem(up.numerator().clone(), x, y), up);
    }

    #[test]
    fn units_invert(c in prop::sample::select(vec![-2i64, -1, 1, 3]), a in -2i64..3, b in -2i64..3, n in raw_elem(0), with_nil in any::<bool>()) {
        let r = ring21();
        // c·D1^a·D2^b·(1 + ν) with ν nilpotent
        let mut nil = &build(&r, &n) * &(&r.x(1, 3).unwrap() * &r.x(3, 2).unwrap());
        if !with_nil {
            nil = r.zero();
        }
        let u = &(&r.int(c) * &r.d_power(a, b)) * &(&r.one() + &nil);
        let inv = u.invert_even_unit().unwrap();
        prop_assert!((&u * &inv).is_one());
    }

    #[test]
    fn parse_render_round_trip(a in raw_elem(0), b in raw_elem(1)) {
        let r = ring21();
        for f in [build(&r, &a), build(&r, &b)] {
            prop_assert_eq!(parse_expr(&f.render(), &r).unwrap(), f);
        }
    }
}

#[test]
fn render_round_trip_in_positive_characteristic() {
    let r = SuperRing::with(1, 2, 5).unwrap();
    let f = parse_expr("3*x[1,2]*x[3,1] - 2*x[2,3]^4*D2^-2 + 7", &r).unwrap();
    assert_eq!(parse_expr(&f.render(), &r).unwrap(), f);
}
