//! Runners for the acceptance suite, shared by the test harness and the CLI.
//!
//! Each runner recomputes its quantities from scratch and reports a single
//! pass/fail line; comparisons are exact.

use std::fmt;
use std::time::Instant;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bidet::{
    expand_combination, genbidet_expand, is_semistandard, standard_rank, straighten, Bidet, BlockSide, GenBidet,
    Tableau,
};
use crate::error::Result;
use crate::filtration::{
    c_quotient_basis, level_escape_witness, verify_closure, verify_gl11_generators, verify_gl11_families,
    verify_quotient_iso_dims,
};
use crate::glsuper::{verify_jacobi, verify_laplace};
use crate::superderive::{verify_divided_powers, verify_left_table, verify_odd_mixed_formula, verify_right_table};
use crate::superring::SuperRing;
use crate::weightcomb::{
    all_partitions, gl_weight_order, list_partitions, partition_dominance_le, partition_le, tilde, GLWeight, Partition,
    SuperWeight,
};

/// Default seed for randomized checks.
pub const DEFAULT_SEED: u64 = 20240531;

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: String,
    pub pass: bool,
    pub detail: String,
    pub millis: u128,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AC-{:02} {} {} (exact; {}; {} ms)",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.detail,
            self.millis
        )
    }
}

/// Options shared by the runners.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReproOptions {
    /// Extra prime for the characteristic-sensitive checks.
    pub characteristic: Option<u64>,
    pub seed: u64,
}

impl Default for ReproOptions {
    fn default() -> Self {
        ReproOptions { characteristic: None, seed: DEFAULT_SEED }
    }
}

fn timed(id: u8, name: &str, f: impl FnOnce() -> Result<(bool, String)>) -> CriterionResult {
    let t = Instant::now();
    let (pass, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
    CriterionResult { id, name: name.into(), pass, detail, millis: t.elapsed().as_millis() }
}

fn chars(opts: &ReproOptions, base: &[u64]) -> Vec<u64> {
    let mut v = base.to_vec();
    if let Some(p) = opts.characteristic {
        if !v.contains(&p) {
            v.push(p);
        }
    }
    v
}

/// Both action tables pass every cell for `(m,n) ≤ (2,2)`.
pub fn action_tables(opts: &ReproOptions) -> CriterionResult {
    timed(1, "action tables", || {
        let mut cells = (0, 0);
        for p in chars(opts, &[0]) {
            for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                let ring = SuperRing::with(m, n, p)?;
                for t in [verify_right_table(&ring), verify_left_table(&ring)] {
                    cells.0 += t.cells_passed();
                    cells.1 += t.cells();
                }
            }
        }
        Ok((cells.0 == cells.1, format!("{}/{} cells", cells.0, cells.1)))
    })
}

/// The mixed odd derivative equals `A_kj y_il / D` at `(3|2)`.
pub fn odd_mixed_formula(_opts: &ReproOptions) -> CriterionResult {
    timed(2, "mixed odd derivative", || {
        let rep = verify_odd_mixed_formula(&SuperRing::with(3, 2, 0)?);
        Ok((rep.all_pass(), format!("{}/{} instances", rep.passed(), rep.total())))
    })
}

/// Jacobi and Laplace identities for all admissible indices, `m ≤ 4`.
pub fn minor_identities(_opts: &ReproOptions) -> CriterionResult {
    timed(3, "adjugate minor identities", || {
        let (mut passed, mut total) = (0, 0);
        for m in 2..=4 {
            let ring = SuperRing::with(m, 1, 0)?;
            for rep in [verify_jacobi(&ring)?, verify_laplace(&ring)?] {
                passed += rep.passed();
                total += rep.total();
            }
        }
        Ok((passed == total, format!("{passed}/{total} identities")))
    })
}

/// Weights sampled for the rank `(1|1)` monomial table.
pub const GL11_SAMPLES: [(i64, i64); 5] = [(0, 0), (1, 0), (2, 1), (3, -1), (5, -2)];

/// Rank `(1|1)`: generator and monomial derivative tables over ℚ and `𝔽_3`.
pub fn gl11_tables(opts: &ReproOptions) -> CriterionResult {
    timed(4, "rank (1|1) derivative tables", || {
        let (mut passed, mut total) = (0, 0);
        for p in chars(opts, &[0, 3]) {
            let ring = SuperRing::with(1, 1, p)?;
            for rep in [verify_gl11_generators(&ring)?, verify_gl11_families(&ring, &GL11_SAMPLES)?] {
                passed += rep.passed();
                total += rep.total();
            }
        }
        Ok((passed == total, format!("{passed}/{total} identities")))
    })
}

/// Expected order listings.
pub const ORDER_LISTING_R0: &str =
    "(0,0,0),(1,0,-1),(2,-1,-1),(1,1,-2),(2,0,-2),(3,-1,-2),(4,-2,-2),(2,1,-3),(3,0,-3),(4,-1,-3),(5,-2,-3),(6,-3,-3)";
pub const ORDER_LISTING_RM4: &str =
    "(-1,-1,-2),(0,-2,-2),(0,-1,-3),(1,-2,-3),(2,-3,-3),(0,0,-4),(1,-1,-4),(2,-2,-4),(3,-3,-4),(4,-4,-4)";
pub const ORDER_LISTING_R4: &str = "(2,1,1),(2,2,0),(3,1,0),(4,0,0),(3,2,-1),(4,1,-1),(5,0,-1),(6,-1,-1)";
pub const BOX_MOVING_3_6: &str = "(2,2,2),(3,2,1),(3,3,0),(4,2,0),(5,1,0),(6,0,0)";

fn join<T: fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// The three rank-3 weight listings and the box-moving sequence.
pub fn order_listings(_opts: &ReproOptions) -> CriterionResult {
    timed(5, "order listings", || {
        let cases = [
            (join(&gl_weight_order(3, 0, 12)), ORDER_LISTING_R0),
            (join(&gl_weight_order(3, -4, 10)), ORDER_LISTING_RM4),
            (join(&gl_weight_order(3, 4, 8)), ORDER_LISTING_R4),
            (list_partitions(3, 6).iter().map(|p| p.display_padded(3)).collect::<Vec<_>>().join(","), BOX_MOVING_3_6),
        ];
        let ok = cases.iter().filter(|(a, b)| a == b).count();
        Ok((ok == cases.len(), format!("{ok}/{} listings verbatim", cases.len())))
    })
}

/// Dominance implies the total order, for all partition pairs with `r ≤ 8`, `m ≤ 4`.
pub fn order_refinement(_opts: &ReproOptions) -> CriterionResult {
    timed(6, "dominance refinement", || {
        let (mut pairs, mut bad) = (0usize, Vec::new());
        for m in 1..=4 {
            for r in 0..=8 {
                let ps = all_partitions(r, m);
                for a in &ps {
                    for b in &ps {
                        if partition_dominance_le(a, b)? {
                            pairs += 1;
                            if !partition_le(a, b)? {
                                bad.push(format!("{a}<={b}"));
                            }
                        }
                    }
                }
            }
        }
        Ok((bad.is_empty(), format!("{} dominance pairs, {} violations", pairs, bad.len())))
    })
}

/// Shapes and alphabets used for the random straightening round trips.
fn random_nonstandard(rng: &mut ChaCha8Rng) -> (usize, GenBidet) {
    let shapes: [&[u32]; 7] = [&[2], &[1, 1], &[2, 1], &[3], &[2, 2], &[3, 1], &[2, 1, 1]];
    loop {
        let m = rng.random_range(2..=3usize);
        let shape = Partition::new(shapes.choose(rng).expect("nonempty").to_vec()).expect("partition");
        if shape.num_parts() > m {
            continue;
        }
        let mut fill = || {
            let e: Vec<u32> = (0..shape.size()).map(|_| rng.random_range(1..=m as u32)).collect();
            Tableau::from_row_major(&shape, &e).expect("fits")
        };
        let (l, r) = (fill(), fill());
        if is_semistandard(&l) && is_semistandard(&r) {
            continue;
        }
        let e = rng.random_range(-1..=1);
        return (m, GenBidet::new(Bidet::new(BlockSide::Plus, l, r).expect("same shape"), e));
    }
}

/// Standard bideterminants are independent, and straightening round-trips.
pub fn bideterminant_bases(opts: &ReproOptions) -> CriterionResult {
    timed(7, "bideterminant bases", || {
        let (mut rank, mut count) = (0, 0);
        for m in 1..=3 {
            for r in 0..=6 {
                let (a, b) = standard_rank(m, r)?;
                rank += a;
                count += b;
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let rings: Vec<SuperRing> = (0..=3).map(|m| SuperRing::with(m.max(1), 1, 0)).collect::<Result<_>>()?;
        let mut round_trips = 0;
        for _ in 0..200 {
            let (m, g) = random_nonstandard(&mut rng);
            let ring = &rings[m];
            let combo = straighten(ring, &g, None)?;
            if combo.iter().all(|(s, _)| s.is_standard())
                && expand_combination(ring, &combo)? == genbidet_expand(ring, &g)?
            {
                round_trips += 1;
            }
        }
        Ok((
            rank == count && round_trips == 200,
            format!("rank {rank} of {count} standard bideterminants; {round_trips}/200 round trips"),
        ))
    })
}

/// Count of semistandard fillings by exhausting all fillings.
pub fn brute_force_ssyt_count(shape: &Partition, alphabet: usize) -> usize {
    let rows = shape.parts().iter().map(|&l| l as usize).collect::<Vec<_>>();
    let cells: usize = rows.iter().sum();
    let mut filling = vec![1usize; cells];
    let mut count = 0;
    if alphabet == 0 {
        return usize::from(cells == 0);
    }
    loop {
        let at = |r: usize, c: usize| filling[rows[..r].iter().sum::<usize>() + c];
        let ok = (0..rows.len()).all(|r| {
            (0..rows[r]).all(|c| (c == 0 || at(r, c - 1) <= at(r, c)) && (r == 0 || at(r - 1, c) < at(r, c)))
        });
        count += usize::from(ok);
        let mut i = 0;
        while i < cells && filling[i] == alphabet {
            filling[i] = 1;
            i += 1;
        }
        if i == cells {
            return count;
        }
        filling[i] += 1;
    }
}

/// Weights with `|γ±| ≤ bound` and last parts in `shifts`.
pub fn small_weights(m: usize, n: usize, bound: u32, shifts: &[i64]) -> Vec<SuperWeight> {
    let half = |rank: usize| -> Vec<GLWeight> {
        let mut out = Vec::new();
        for size in 0..=bound {
            for g in all_partitions(size, rank - 1) {
                for &s in shifts {
                    let w: Vec<i64> = g.padded(rank).iter().map(|&x| x as i64 + s).collect();
                    out.push(GLWeight::new(w).expect("dominant"));
                }
            }
        }
        out
    };
    let mut out = Vec::new();
    for p in half(m) {
        for q in half(n) {
            out.push(SuperWeight { plus: p.clone(), minus: q });
        }
    }
    out
}

/// Quotient basis counts against `2^{2mn} K⁺ K⁻`, and independence modulo the lower part.
pub fn quotient_dimensions(_opts: &ReproOptions) -> CriterionResult {
    timed(8, "quotient dimensions", || {
        let (mut ok, mut total, mut independent) = (0, 0, 0);
        for (m, n) in [(1, 1), (2, 1)] {
            let ring = SuperRing::with(m, n, 0)?;
            for lam in small_weights(m, n, 2, &[-1, 0, 1]) {
                let kp = brute_force_ssyt_count(&tilde(&lam.plus).0, m).pow(2);
                let km = brute_force_ssyt_count(&tilde(&lam.minus).0, n).pow(2);
                let expected = (1usize << (2 * m * n)) * kp * km;
                total += 1;
                ok += usize::from(c_quotient_basis(&ring, &lam)?.len() == expected);
                independent += usize::from(verify_quotient_iso_dims(&ring, &lam, 1)?.all_pass());
            }
        }
        Ok((
            ok == total && independent == total,
            format!("{ok}/{total} counts match, {independent}/{total} independent modulo lower"),
        ))
    })
}

/// Level-shift closure at `(1|1), λ=(2|1), lmax 3` and `(2|1), λ=((1,0)|(1)), lmax 2`.
pub fn closure(opts: &ReproOptions) -> CriterionResult {
    timed(9, "closure under superderivations", || {
        let mut cases = vec![(1, 1, vec![2], vec![1], 3, 0), (2, 1, vec![1, 0], vec![1], 2, 0)];
        if let Some(p) = opts.characteristic {
            cases.push((1, 1, vec![2], vec![1], 3, p));
        }
        let (mut passed, mut total) = (0, 0);
        for (m, n, lp, lm, lmax, p) in cases {
            let ring = SuperRing::with(m, n, p)?;
            let rep = verify_closure(&ring, &SuperWeight::new(lp, lm)?, lmax)?;
            passed += rep.passed();
            total += rep.total();
        }
        Ok((passed == total, format!("{passed}/{total} derivatives in span")))
    })
}

/// Squares of divided-power derivations vanish for `(m,n) ≤ (2,2)`.
pub fn divided_powers(opts: &ReproOptions) -> CriterionResult {
    timed(10, "divided powers", || {
        let (mut passed, mut total) = (0, 0);
        for p in chars(opts, &[0]) {
            for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                let rep = verify_divided_powers(&SuperRing::with(m, n, p)?);
                passed += rep.passed();
                total += rep.total();
            }
        }
        Ok((passed == total, format!("{passed}/{total} checks")))
    })
}

/// At `(1|1)` some odd derivative leaves its level and is caught one level up.
pub fn level_escape(_opts: &ReproOptions) -> CriterionResult {
    timed(11, "single level not closed", || {
        let ring = SuperRing::with(1, 1, 0)?;
        let w = level_escape_witness(&ring, &SuperWeight::new(vec![2], vec![1])?, 0)?;
        Ok(match w {
            Some(w) => (
                w.caught_next_level,
                format!("{} of {} leaves level 0 (residual {})", w.derivation, w.vector, w.residual),
            ),
            None => (false, "no escaping derivative found".into()),
        })
    })
}

/// Runner names, in criterion order.
pub const CRITERIA: [&str; 11] =
    ["tables", "odd", "minors", "gl11", "orders", "refinement", "bidet", "quotient", "closure", "divpow", "escape"];

/// Run one criterion by number (1-based).
pub fn run_criterion(id: u8, opts: &ReproOptions) -> Option<CriterionResult> {
    let f: fn(&ReproOptions) -> CriterionResult = match id {
        1 => action_tables,
        2 => odd_mixed_formula,
        3 => minor_identities,
        4 => gl11_tables,
        5 => order_listings,
        6 => order_refinement,
        7 => bideterminant_bases,
        8 => quotient_dimensions,
        9 => closure,
        10 => divided_powers,
        11 => level_escape,
        _ => return None,
    };
    Some(f(opts))
}

/// Criterion number for a runner name or number string.
pub fn criterion_id(name: &str) -> Option<u8> {
    if let Ok(k) = name.trim_start_matches("ac").trim_start_matches("AC-").parse::<u8>() {
        return (1..=11).contains(&k).then_some(k);
    }
    CRITERIA.iter().position(|c| *c == name).map(|i| i as u8 + 1)
}

/// Run the whole suite, or the selected criteria.
pub fn run_all(only: &[u8], opts: &ReproOptions) -> Vec<CriterionResult> {
    let ids: Vec<u8> = if only.is_empty() { (1..=11).collect() } else { only.to_vec() };
    ids.into_iter().filter_map(|id| run_criterion(id, opts)).collect()
}
