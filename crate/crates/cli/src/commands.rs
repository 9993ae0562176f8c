//! Subcommand implementations. Each returns an [`Outcome`] rendered by `main`.

use serde::Serialize;
use serde_json::{json, Value};
use superfilt_core::bidet::enumerate_semistandard;
use superfilt_core::filtration::{
    c_leq_basis_truncated, c_quotient_basis, m_leq_basis, verify_closure, verify_gl11_generators, verify_gl11_families,
    verify_quotient_iso_dims, FiltrationReport,
};
use superfilt_core::glsuper::{phistar, verify_jacobi, verify_laplace};
use superfilt_core::repro::{criterion_id, run_all, ReproOptions, GL11_SAMPLES};
use superfilt_core::report::{Report, TableReport};
use superfilt_core::superderive::{
    derive, verify_det_derivative, verify_divided_powers, verify_left_table, verify_odd_mixed_formula,
    verify_right_table, Derivation, Side,
};
use superfilt_core::weightcomb::{
    all_partitions_sorted, gl_weight_order, super_weight_order, ideal_chain, list_partitions, predecessors, young_diagram,
    Partition, SuperWeight, WeightIdeal,
};
use superfilt_core::{parse_expr, Error, Result, SuperRing};

use crate::args::{BasisWhat, Global, PartitionsCmd, SideArg, VerifyWhat, WeightsCmd};

/// Rendered result of one command.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub pass: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Outcome {
        Outcome { text, json, pass: true }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn ring(g: &Global) -> Result<SuperRing> {
    SuperRing::with(g.m, g.n, g.characteristic)
}

fn parse_ints<T: std::str::FromStr>(s: &str) -> Result<Vec<T>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse::<T>().map_err(|_| invalid(format!("not an integer: {t:?}")))).collect()
}

/// Parse `"1,0|1"` (parentheses optional).
pub fn parse_weight(s: &str) -> Result<SuperWeight> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (p, q) = s.split_once('|').ok_or_else(|| invalid(format!("weight {s:?} needs a '|'")))?;
    SuperWeight::new(parse_ints(p)?, parse_ints(q)?)
}

fn parse_pos(s: &str) -> Result<(usize, usize)> {
    match parse_ints::<usize>(s)?.as_slice() {
        [k, l] => Ok((*k, *l)),
        _ => Err(invalid(format!("position {s:?} must be k,l"))),
    }
}

fn check_dims(g: &Global, lambda: &SuperWeight) -> Result<()> {
    if lambda.dims() != (g.m, g.n) {
        let (a, b) = lambda.dims();
        return Err(invalid(format!("weight {lambda} has shape ({a}|{b}) but the ring is ({}|{})", g.m, g.n)));
    }
    Ok(())
}

pub fn partitions(g: &Global, cmd: &PartitionsCmd) -> Result<Outcome> {
    match cmd {
        PartitionsCmd::List { r, all, diagrams } => {
            if g.m == 0 {
                return Err(invalid("--m must be positive"));
            }
            let list = if *all { all_partitions_sorted(g.m, *r) } else { list_partitions(g.m, *r) };
            let mut text = String::new();
            for p in &list {
                text.push_str(&p.display_padded(g.m));
                text.push('\n');
                if *diagrams {
                    text.push_str(&young_diagram(p));
                    text.push('\n');
                }
            }
            Ok(Outcome::ok(text, to_json(&list)))
        }
        PartitionsCmd::Tableaux { shape, alphabet } => {
            let shape = Partition::new(parse_ints(shape)?)?;
            let list = enumerate_semistandard(&shape, *alphabet);
            let mut text = String::new();
            for t in &list {
                text.push_str(&format!("{t}\n"));
            }
            text.push_str(&format!("{} semistandard tableaux\n", list.len()));
            Ok(Outcome::ok(text, to_json(&list)))
        }
    }
}

fn lines<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| format!("{x}\n")).collect()
}

pub fn weights(g: &Global, cmd: &WeightsCmd) -> Result<Outcome> {
    match cmd {
        WeightsCmd::GlOrder { r, count } => {
            if g.m == 0 {
                return Err(invalid("--m must be positive"));
            }
            let list = gl_weight_order(g.m, *r, *count);
            Ok(Outcome::ok(lines(&list), to_json(&list)))
        }
        WeightsCmd::SuperOrder { r_plus, r_minus, count } => {
            if g.m == 0 || g.n == 0 {
                return Err(invalid("--m and --n must be positive"));
            }
            let list = super_weight_order(g.m, g.n, *r_plus, *r_minus, *count);
            Ok(Outcome::ok(lines(&list), to_json(&list)))
        }
        WeightsCmd::Predecessors { lambda, height } => {
            let list = predecessors(&parse_weight(lambda)?, *height);
            Ok(Outcome::ok(lines(&list), to_json(&list)))
        }
        WeightsCmd::Chain { gens, depth, height } => {
            let gens = gens.split(';').map(parse_weight).collect::<Result<Vec<_>>>()?;
            let chain = ideal_chain(&WeightIdeal::new(gens)?, *depth, *height);
            let text = chain
                .iter()
                .enumerate()
                .map(|(i, level)| {
                    let ws: Vec<String> = level.iter().map(|w| w.to_string()).collect();
                    format!("{i}: {}\n", ws.join(" "))
                })
                .collect();
            Ok(Outcome::ok(text, to_json(&chain)))
        }
    }
}

pub fn phistar_cmd(g: &Global, expr: &str) -> Result<Outcome> {
    let ring = ring(g)?;
    let f = parse_expr(expr, &ring)?;
    let out = phistar(&ring, &f)?.render();
    Ok(Outcome::ok(format!("{out}\n"), json!({ "input": f.render(), "result": out })))
}

pub fn derive_cmd(g: &Global, side: SideArg, pos: &str, expr: &str, times: u32) -> Result<Outcome> {
    let ring = ring(g)?;
    let (k, l) = parse_pos(pos)?;
    let side = match side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let d = Derivation::new(ring.spec(), side, k, l)?;
    let f = parse_expr(expr, &ring)?;
    let mut out = f.clone();
    for _ in 0..times {
        out = derive(&d, &out);
    }
    let out = out.render();
    Ok(Outcome::ok(
        format!("{out}\n"),
        json!({ "derivation": d.to_string(), "times": times, "input": f.render(), "result": out }),
    ))
}

fn from_report(r: Report) -> Outcome {
    let pass = r.all_pass();
    Outcome { text: r.to_string(), json: to_json(&r), pass }
}

fn from_tables(tables: Vec<TableReport>) -> Outcome {
    let passed: usize = tables.iter().map(|t| t.cells_passed()).sum();
    let cells: usize = tables.iter().map(|t| t.cells()).sum();
    let mut text: String = tables.iter().map(|t| format!("{t}\n")).collect();
    text.push_str(&format!("{passed}/{cells} cells pass\n"));
    Outcome {
        pass: passed == cells,
        json: json!({ "cells_passed": passed, "cells": cells, "tables": to_json(&tables) }),
        text,
    }
}

fn from_filtration(r: FiltrationReport) -> Outcome {
    let pass = r.all_pass();
    Outcome { text: r.to_string(), json: to_json(&r), pass }
}

pub fn verify(g: &Global, what: VerifyWhat, lambda: Option<&str>, lmax: u32) -> Result<Outcome> {
    let ring = ring(g)?;
    let weight = || -> Result<SuperWeight> {
        let w = parse_weight(lambda.ok_or_else(|| invalid("--lambda is required"))?)?;
        check_dims(g, &w)?;
        Ok(w)
    };
    Ok(match what {
        VerifyWhat::Tables => from_tables(vec![verify_right_table(&ring), verify_left_table(&ring)]),
        VerifyWhat::Mixed => from_report(verify_odd_mixed_formula(&ring)),
        VerifyWhat::Jacobi => from_report(verify_jacobi(&ring)?),
        VerifyWhat::Laplace => from_report(verify_laplace(&ring)?),
        VerifyWhat::Divpow => from_report(verify_divided_powers(&ring)),
        VerifyWhat::Detderiv => from_report(verify_det_derivative(&ring)),
        VerifyWhat::Gl11 => {
            let mut r = verify_gl11_generators(&ring)?;
            r.extend(verify_gl11_families(&ring, &GL11_SAMPLES)?);
            from_report(r)
        }
        VerifyWhat::Closure => from_filtration(verify_closure(&ring, &weight()?, lmax)?),
        VerifyWhat::Quotient => from_filtration(verify_quotient_iso_dims(&ring, &weight()?, lmax)?),
    })
}

pub fn basis(g: &Global, what: BasisWhat, lambda: &str, lmax: u32) -> Result<Outcome> {
    let ring = ring(g)?;
    let w = parse_weight(lambda)?;
    check_dims(g, &w)?;
    let (text, json) = match what {
        BasisWhat::M => {
            let v = m_leq_basis(&ring, &w)?;
            (lines(&v), to_json(&v))
        }
        BasisWhat::CQuotient => {
            let v = c_quotient_basis(&ring, &w)?;
            (lines(&v), to_json(&v))
        }
        BasisWhat::CTrunc => {
            let v = c_leq_basis_truncated(&ring, &w, lmax)?;
            (lines(&v), to_json(&v))
        }
    };
    let count = json.as_array().map_or(0, |a| a.len());
    Ok(Outcome::ok(format!("{text}{count} vectors\n"), json))
}

pub fn repro(g: &Global, only: &[String]) -> Result<Outcome> {
    let ids = only
        .iter()
        .map(|s| criterion_id(s.trim()).ok_or_else(|| invalid(format!("unknown criterion {s:?}"))))
        .collect::<Result<Vec<u8>>>()?;
    let characteristic = (g.characteristic != 0).then_some(g.characteristic);
    let results = run_all(&ids, &ReproOptions { characteristic, seed: g.seed });
    let pass = results.iter().all(|r| r.pass);
    let mut text = lines(&results);
    let n = results.iter().filter(|r| r.pass).count();
    text.push_str(&format!("{n}/{} criteria pass\n", results.len()));
    Ok(Outcome { text, json: to_json(&results), pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_syntax() {
        let w = parse_weight("1,0|1").unwrap();
        assert_eq!(w, SuperWeight::new(vec![1, 0], vec![1]).unwrap());
        assert_eq!(parse_weight("(2|-1,-1)").unwrap().to_string(), "(2|-1,-1)");
        assert!(parse_weight("1,0").is_err());
        assert!(parse_weight("0,1|0").is_err());
        assert!(parse_weight("a|1").is_err());
        assert_eq!(parse_pos("2, 3").unwrap(), (2, 3));
        assert!(parse_pos("1").is_err());
    }
}
