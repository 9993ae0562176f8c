//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line. All comparisons are exact.

use superfilt_core::repro::{run_criterion, ReproOptions};

fn check(id: u8) {
    let res = run_criterion(id, &ReproOptions::default()).expect("known criterion");
    println!("{res}");
    assert!(res.pass, "{res}");
}

#[test]
fn ac01_action_tables() {
    check(1);
}

#[test]
fn ac02_mixed_odd_derivative() {
    check(2);
}

#[test]
fn ac03_minor_identities() {
    check(3);
}

#[test]
fn ac04_rank_one_one_tables() {
    check(4);
}

#[test]
fn ac05_order_listings() {
    check(5);
}

#[test]
fn ac06_order_refines_dominance() {
    check(6);
}

#[test]
fn ac07_bideterminant_bases() {
    check(7);
}

#[test]
fn ac08_quotient_dimensions() {
    check(8);
}

#[test]
fn ac09_closure() {
    check(9);
}

#[test]
fn ac10_divided_powers() {
    check(10);
}

#[test]
fn ac11_single_level_not_closed() {
    check(11);
}
