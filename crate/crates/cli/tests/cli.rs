use std::process::{Command, Output};

use superfilt_core::{parse_expr, SuperRing};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superfilt")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn derive_generator() {
    let o = run(&["--m", "1", "--n", "1", "derive", "--side", "right", "--pos", "1,2", "--expr", "y[1,1]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "x[1,2]");
}

#[test]
fn tables_at_two_two() {
    let o = run(&["verify", "tables", "--m", "2", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().last(), Some("32/32 cells pass"));
}

#[test]
fn box_moving_listing() {
    let o = run(&["partitions", "list", "--m", "3", "--r", "6"]);
    let got: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(got, ["(2,2,2)", "(3,2,1)", "(3,3,0)", "(4,2,0)", "(5,1,0)", "(6,0,0)"]);
}

#[test]
fn weight_order_one_per_line() {
    let o = run(&["weights", "gl-order", "--m", "3", "--r", "4", "--count", "4"]);
    assert_eq!(stdout(&o), "(2,1,1)\n(2,2,0)\n(3,1,0)\n(4,0,0)\n");
}

#[test]
fn json_results_parse_back() {
    let ring = SuperRing::with(2, 1, 0).unwrap();
    let o = run(&[
        "--m", "2", "--n", "1", "--format", "json", "derive", "--side", "left", "--pos", "3,1", "--expr",
        "x[1,1]*x[2,2]",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let result = parse_expr(v["result"].as_str().unwrap(), &ring).unwrap();
    assert_eq!(result.render(), v["result"].as_str().unwrap());

    let o = run(&["--m", "2", "--n", "1", "--format", "json", "phistar", "--expr", "x[3,3]"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let s = v["result"].as_str().unwrap();
    assert_eq!(parse_expr(s, &ring).unwrap().render(), s);
}

#[test]
fn closure_report_passes() {
    let o = run(&["--format", "json", "verify", "closure", "--lambda", "2|1", "--lmax", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["derive", "--side", "right", "--pos", "9,9", "--expr", "x[1,1]"]).status.code(), Some(2));
    assert_eq!(run(&["derive", "--side", "right", "--pos", "1,2", "--expr", "x[1,"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "closure", "--lambda", "1,0|1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "closure"]).status.code(), Some(2));
    assert_eq!(run(&["--char", "4", "verify", "tables"]).status.code(), Some(2));
}

#[test]
fn repro_subset() {
    let o = run(&["repro", "--only", "orders,6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("AC-05 PASS"));
    assert!(out.contains("AC-06 PASS"));
    assert_eq!(run(&["repro", "--only", "nope"]).status.code(), Some(2));
}
