//! Partitions, dominant weights, dominance orders and the explicit total
//! orders used to index filtrations.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Partition> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (0-based), zero beyond the last nonzero part.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn padded(&self, m: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(m.max(v.len()), 0);
        v
    }

    /// Tuple text with exactly `m` entries, e.g. `(3,3,0)`.
    pub fn display_padded(&self, m: usize) -> String {
        let v: Vec<String> = self.padded(m).iter().map(|x| x.to_string()).collect();
        format!("({})", v.join(","))
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

/// Transpose of the Young diagram.
pub fn conjugate(p: &Partition) -> Partition {
    let width = p.part(0) as usize;
    let parts = (0..width).map(|c| p.0.iter().filter(|&&r| r as usize > c).count() as u32).collect();
    Partition(parts)
}

/// ASCII drawing of the Young diagram, one box per cell.
pub fn young_diagram(p: &Partition) -> String {
    if p.is_empty() {
        return "(empty)\n".into();
    }
    let border = |w: u32| format!("+{}\n", "-+".repeat(w as usize));
    let mut out = border(p.part(0));
    for &row in p.parts() {
        out.push_str(&format!("|{}\n", " |".repeat(row as usize)));
        out.push_str(&border(row));
    }
    out
}

/// Dominance `μ ⊴ λ`: equal totals and nonnegative prefix sums of `λ − μ`.
pub fn dominance_le(mu: &[i64], lambda: &[i64]) -> Result<bool> {
    if mu.len() != lambda.len() {
        return Err(Error::InvalidArgument(format!("length mismatch {} vs {}", mu.len(), lambda.len())));
    }
    let mut acc = 0i64;
    for (a, b) in mu.iter().zip(lambda) {
        acc += b - a;
        if acc < 0 {
            return Ok(false);
        }
    }
    Ok(acc == 0)
}

fn as_i64(p: &Partition, len: usize) -> Vec<i64> {
    p.padded(len).into_iter().map(i64::from).collect()
}

/// Dominance on partitions of the same size.
pub fn partition_dominance_le(p: &Partition, q: &Partition) -> Result<bool> {
    let len = p.num_parts().max(q.num_parts());
    dominance_le(&as_i64(p, len), &as_i64(q, len))
}

/// Total comparison: `p < q` iff `q′ <_lex p′`.
pub fn partition_cmp(p: &Partition, q: &Partition) -> Ordering {
    conjugate(q).0.cmp(&conjugate(p).0)
}

/// `p ≤ q` in the reverse lexicographic order on conjugates.
pub fn partition_le(p: &Partition, q: &Partition) -> Result<bool> {
    if p.size() != q.size() {
        return Err(Error::InvalidArgument(format!("sizes differ: {} vs {}", p.size(), q.size())));
    }
    Ok(partition_cmp(p, q) != Ordering::Greater)
}

/// Successor under the box-moving rule: the last box of the last nonempty row
/// moves to the end of the nearest row above that can take it.
pub fn next_partition(p: &Partition, m: usize) -> Option<Partition> {
    if p.num_parts() > m || p.num_parts() <= 1 {
        return None;
    }
    let mut v = p.0.clone();
    let last = v.len() - 1;
    v[last] -= 1;
    for t in (0..last).rev() {
        if t == 0 || v[t - 1] > v[t] {
            v[t] += 1;
            break;
        }
    }
    Some(Partition::new(v).expect("box move keeps a partition"))
}

/// The near-rectangular minimum `([r/m]+1, …, [r/m], …)` followed by its
/// box-moving successors up to `(r)`.
pub fn list_partitions(m: usize, r: u32) -> Vec<Partition> {
    if m == 0 {
        return Vec::new();
    }
    let (q, rem) = (r / m as u32, (r % m as u32) as usize);
    let start: Vec<u32> = (0..m).map(|i| if i < rem { q + 1 } else { q }).collect();
    let mut cur = Partition::new(start).expect("weakly decreasing");
    let mut out = vec![cur.clone()];
    while let Some(next) = next_partition(&cur, m) {
        out.push(next.clone());
        cur = next;
    }
    out
}

/// Every partition of `r` with at most `max_parts` parts (unordered).
pub fn all_partitions(r: u32, max_parts: usize) -> Vec<Partition> {
    fn rec(rem: u32, max_part: u32, parts_left: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if parts_left == 0 {
            return;
        }
        for p in (1..=max_part.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, parts_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, r, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Every partition of `r` with at most `m` parts, ascending in `≤`.
pub fn all_partitions_sorted(m: usize, r: u32) -> Vec<Partition> {
    let mut v = all_partitions(r, m);
    v.sort_by(partition_cmp);
    v
}

/// A dominant `GL(m)` weight: a weakly decreasing integer tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct GLWeight(Vec<i64>);

impl TryFrom<Vec<i64>> for GLWeight {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<GLWeight> {
        GLWeight::new(v)
    }
}

impl From<GLWeight> for Vec<i64> {
    fn from(w: GLWeight) -> Vec<i64> {
        w.0
    }
}

impl GLWeight {
    pub fn new(v: Vec<i64>) -> Result<GLWeight> {
        if v.is_empty() {
            return Err(Error::InvalidArgument("empty weight".into()));
        }
        if v.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("{v:?} is not dominant")));
        }
        Ok(GLWeight(v))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn last(&self) -> i64 {
        *self.0.last().expect("nonempty")
    }

    pub fn is_polynomial(&self) -> bool {
        self.last() >= 0
    }

    pub fn shifted(&self, s: i64) -> GLWeight {
        GLWeight(self.0.iter().map(|x| x + s).collect())
    }
}

impl fmt::Display for GLWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

/// `λ ↦ (λ − λ_m ν, λ_m)`.
pub fn tilde(lambda: &GLWeight) -> (Partition, i64) {
    let s = lambda.last();
    let parts = lambda.0.iter().map(|x| (x - s) as u32).collect();
    (Partition::new(parts).expect("dominant"), s)
}

/// Streaming filtration order on dominant `GL(m)` weights of size `r`.
///
/// Blocks run over `r̃ ≡ r (mod m)`, `r̃ ≥ 0`, increasing by `m`; each block lists
/// the partitions of `r̃` with last part zero in `≤` order, shifted by `−((r̃−r)/m)ν`.
#[derive(Clone, Debug)]
pub struct GlWeightOrder {
    m: usize,
    r: i64,
    next_block: i64,
    pending: VecDeque<GLWeight>,
    done: bool,
}

impl GlWeightOrder {
    pub fn new(m: usize, r: i64) -> GlWeightOrder {
        assert!(m >= 1, "rank must be positive");
        GlWeightOrder { m, r, next_block: r.rem_euclid(m as i64), pending: VecDeque::new(), done: false }
    }
}

impl Iterator for GlWeightOrder {
    type Item = GLWeight;

    fn next(&mut self) -> Option<GLWeight> {
        while self.pending.is_empty() && !self.done {
            let rt = self.next_block;
            let shift = (rt - self.r) / self.m as i64;
            for p in all_partitions_sorted(self.m - 1, rt as u32) {
                let w: Vec<i64> = p.padded(self.m).iter().map(|&x| x as i64 - shift).collect();
                self.pending.push_back(GLWeight(w));
            }
            self.next_block += self.m as i64;
            // With m = 1 there is a single weight of each size.
            if self.m == 1 {
                self.done = true;
            }
        }
        self.pending.pop_front()
    }
}

/// The first `count` weights of [`GlWeightOrder`].
pub fn gl_weight_order(m: usize, r: i64, count: usize) -> Vec<GLWeight> {
    GlWeightOrder::new(m, r).take(count).collect()
}

/// 0-based position of `lambda` in the order of its size.
pub fn gl_weight_index(lambda: &GLWeight) -> usize {
    let (t, _) = tilde(lambda);
    let m = lambda.rank();
    let r = lambda.size();
    let mut idx = 0;
    let mut rt = r.rem_euclid(m as i64);
    loop {
        let shift = (rt - r) / m as i64;
        for p in all_partitions_sorted(m - 1, rt as u32) {
            if rt == t.size() as i64 && p == t {
                return idx;
            }
            let _ = shift;
            idx += 1;
        }
        if m == 1 {
            return idx - 1;
        }
        rt += m as i64;
    }
}

/// A dominant weight of `GL(m|n)`, written `(λ⁺|λ⁻)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(Vec<i64>, Vec<i64>)", into = "(Vec<i64>, Vec<i64>)")]
pub struct SuperWeight {
    pub plus: GLWeight,
    pub minus: GLWeight,
}

impl TryFrom<(Vec<i64>, Vec<i64>)> for SuperWeight {
    type Error = Error;
    fn try_from((p, q): (Vec<i64>, Vec<i64>)) -> Result<SuperWeight> {
        SuperWeight::new(p, q)
    }
}

impl From<SuperWeight> for (Vec<i64>, Vec<i64>) {
    fn from(w: SuperWeight) -> (Vec<i64>, Vec<i64>) {
        (w.plus.0, w.minus.0)
    }
}

impl SuperWeight {
    pub fn new(plus: Vec<i64>, minus: Vec<i64>) -> Result<SuperWeight> {
        Ok(SuperWeight { plus: GLWeight::new(plus)?, minus: GLWeight::new(minus)? })
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.plus.rank(), self.minus.rank())
    }

    /// `(r⁺, r⁻)`.
    pub fn bidegree(&self) -> (i64, i64) {
        (self.plus.size(), self.minus.size())
    }

    /// The concatenated `(m+n)`-tuple.
    pub fn concat(&self) -> Vec<i64> {
        self.plus.0.iter().chain(self.minus.0.iter()).copied().collect()
    }

    /// `λ − lα` for `α = ε_m − ε_{m+1}`; always dominant.
    pub fn minus_alpha(&self, l: i64) -> SuperWeight {
        let mut p = self.plus.0.clone();
        let mut q = self.minus.0.clone();
        *p.last_mut().unwrap() -= l;
        q[0] += l;
        SuperWeight::new(p, q).expect("dominant for l ≥ 0")
    }

    /// The shapes `(λ̃⁺, λ̃⁻)` and shifts `(λ⁺_m, λ⁻_n)`.
    pub fn gamma(&self) -> ((Partition, i64), (Partition, i64)) {
        (tilde(&self.plus), tilde(&self.minus))
    }
}

impl fmt::Display for SuperWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.plus.0.iter().map(|x| x.to_string()).collect();
        let q: Vec<String> = self.minus.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({}|{})", p.join(","), q.join(","))
    }
}

/// Dominance for `gl(m|n)`: prefix sums on the concatenated tuple.
pub fn super_dominance(mu: &SuperWeight, lambda: &SuperWeight) -> Result<bool> {
    if mu.dims() != lambda.dims() {
        return Err(Error::InvalidArgument("weights of different ranks".into()));
    }
    dominance_le(&mu.concat(), &lambda.concat())
}

/// Componentwise dominance on the two halves.
pub fn strong_dominance(mu: &SuperWeight, lambda: &SuperWeight) -> Result<bool> {
    if mu.dims() != lambda.dims() || mu.bidegree() != lambda.bidegree() {
        return Err(Error::InvalidArgument(format!("bidegrees differ: {mu} vs {lambda}")));
    }
    Ok(dominance_le(mu.plus.entries(), lambda.plus.entries())?
        && dominance_le(mu.minus.entries(), lambda.minus.entries())?)
}

/// Lazily materialized prefix of a `GL` order.
#[derive(Clone, Debug)]
struct LazyList {
    iter: GlWeightOrder,
    items: Vec<GLWeight>,
    exhausted: bool,
}

impl LazyList {
    fn new(m: usize, r: i64) -> LazyList {
        LazyList { iter: GlWeightOrder::new(m, r), items: Vec::new(), exhausted: false }
    }

    /// 1-based access.
    fn get(&mut self, i: usize) -> Option<GLWeight> {
        while self.items.len() < i && !self.exhausted {
            match self.iter.next() {
                Some(w) => self.items.push(w),
                None => self.exhausted = true,
            }
        }
        self.items.get(i - 1).cloned()
    }
}

/// Streaming interleaved order on dominant `GL(m|n)` weights of bidegree `(r⁺|r⁻)`.
///
/// Step `i+1` appends `(λ⁺_{i+1}|λ⁻_1..i)`, then `(λ⁺_1..i|λ⁻_{i+1})`, then
/// `(λ⁺_{i+1}|λ⁻_{i+1})`.
#[derive(Clone, Debug)]
pub struct SuperWeightOrder {
    plus: LazyList,
    minus: LazyList,
    step: usize,
    pending: VecDeque<(usize, usize)>,
    done: bool,
}

impl SuperWeightOrder {
    pub fn new(m: usize, n: usize, r_plus: i64, r_minus: i64) -> SuperWeightOrder {
        SuperWeightOrder {
            plus: LazyList::new(m, r_plus),
            minus: LazyList::new(n, r_minus),
            step: 0,
            pending: VecDeque::new(),
            done: false,
        }
    }

    fn weight(&mut self, j: usize, k: usize) -> SuperWeight {
        SuperWeight { plus: self.plus.get(j).expect("listed"), minus: self.minus.get(k).expect("listed") }
    }
}

impl Iterator for SuperWeightOrder {
    type Item = SuperWeight;

    fn next(&mut self) -> Option<SuperWeight> {
        while self.pending.is_empty() && !self.done {
            self.step += 1;
            let s = self.step;
            let has_p = self.plus.get(s).is_some();
            let has_m = self.minus.get(s).is_some();
            if !has_p && !has_m {
                self.done = true;
                break;
            }
            if has_p {
                for k in 1..s {
                    if self.minus.get(k).is_some() {
                        self.pending.push_back((s, k));
                    }
                }
            }
            if has_m {
                for j in 1..s {
                    if self.plus.get(j).is_some() {
                        self.pending.push_back((j, s));
                    }
                }
            }
            if has_p && has_m {
                self.pending.push_back((s, s));
            }
        }
        let (j, k) = self.pending.pop_front()?;
        Some(self.weight(j, k))
    }
}

/// The first `count` weights of [`SuperWeightOrder`].
pub fn super_weight_order(m: usize, n: usize, r_plus: i64, r_minus: i64, count: usize) -> Vec<SuperWeight> {
    SuperWeightOrder::new(m, n, r_plus, r_minus).take(count).collect()
}

/// 1-based positions `(j, k)` of the two halves in their `GL` orders.
pub fn super_order_indices(lambda: &SuperWeight) -> (usize, usize) {
    (gl_weight_index(&lambda.plus) + 1, gl_weight_index(&lambda.minus) + 1)
}

fn interleaved_key(j: usize, k: usize) -> (usize, usize) {
    let s = j.max(k);
    let offset = if j == s && k < s {
        k - 1
    } else if k == s && j < s {
        s - 1 + j - 1
    } else {
        2 * (s - 1)
    };
    (s, offset)
}

/// Comparison in the interleaved order (same bidegree required).
pub fn super_order_cmp(mu: &SuperWeight, lambda: &SuperWeight) -> Result<Ordering> {
    if mu.dims() != lambda.dims() || mu.bidegree() != lambda.bidegree() {
        return Err(Error::InvalidArgument(format!("bidegrees differ: {mu} vs {lambda}")));
    }
    let (a, b) = super_order_indices(mu);
    let (c, d) = super_order_indices(lambda);
    Ok(interleaved_key(a, b).cmp(&interleaved_key(c, d)))
}

/// `μ ≤_lex λ`: first halves compared in the `GL(m)` order, ties broken by the second halves.
pub fn lex_le(mu: &SuperWeight, lambda: &SuperWeight) -> Result<bool> {
    if mu.dims() != lambda.dims() || mu.bidegree() != lambda.bidegree() {
        return Err(Error::InvalidArgument(format!("bidegrees differ: {mu} vs {lambda}")));
    }
    Ok(super_order_indices(mu) <= super_order_indices(lambda))
}

/// Weights of the interleaved order up to and including `lambda`.
pub fn super_order_prefix(lambda: &SuperWeight) -> Vec<SuperWeight> {
    let (m, n) = lambda.dims();
    let (rp, rm) = lambda.bidegree();
    let mut out = Vec::new();
    for w in SuperWeightOrder::new(m, n, rp, rm) {
        let hit = w == *lambda;
        out.push(w);
        if hit {
            return out;
        }
    }
    unreachable!("every dominant weight occurs in the order of its bidegree")
}

/// Round-robin order over a finite list of bidegrees: the `i`-th weights of
/// all bidegrees precede the `(i+1)`-th ones.
pub fn ev_order(m: usize, n: usize, bidegrees: &[(i64, i64)], rounds: usize) -> Vec<SuperWeight> {
    let mut iters: Vec<SuperWeightOrder> =
        bidegrees.iter().map(|&(p, q)| SuperWeightOrder::new(m, n, p, q)).collect();
    let mut out = Vec::new();
    for _ in 0..rounds {
        for it in iters.iter_mut() {
            if let Some(w) = it.next() {
                out.push(w);
            }
        }
    }
    out
}

fn is_dominant(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

/// Dominant weights `μ ◁ λ` covered by `λ`, searched among `λ − β` with the
/// simple-root height of `β` at most `height_bound`.
pub fn predecessors(lambda: &SuperWeight, height_bound: u32) -> Vec<SuperWeight> {
    let (m, n) = lambda.dims();
    let len = m + n;
    let base = lambda.concat();
    let mut candidates = BTreeSet::new();
    // prefix sums c_1..c_{len-1} ≥ 0 with Σ c ≤ bound, not all zero
    fn rec(
        idx: usize,
        budget: u32,
        c: &mut Vec<i64>,
        len: usize,
        base: &[i64],
        m: usize,
        out: &mut BTreeSet<SuperWeight>,
    ) {
        if idx == len - 1 {
            if c.iter().all(|&x| x == 0) {
                return;
            }
            let mut v = base.to_vec();
            for t in 0..len {
                let prev = if t == 0 { 0 } else { c[t - 1] };
                let cur = if t == len - 1 { 0 } else { c[t] };
                v[t] -= cur - prev;
            }
            if is_dominant(&v[..m]) && is_dominant(&v[m..]) {
                out.insert(SuperWeight::new(v[..m].to_vec(), v[m..].to_vec()).expect("dominant"));
            }
            return;
        }
        for x in 0..=budget {
            c.push(x as i64);
            rec(idx + 1, budget - x, c, len, base, m, out);
            c.pop();
        }
    }
    rec(0, height_bound, &mut Vec::new(), len, &base, m, &mut candidates);
    let cands: Vec<SuperWeight> = candidates.into_iter().collect();
    maximal(&cands)
}

/// Elements not strictly below another element of the set under `⊴`.
pub fn maximal(set: &[SuperWeight]) -> Vec<SuperWeight> {
    let mut uniq: Vec<SuperWeight> = set.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let snapshot = uniq.clone();
    uniq.retain(|mu| !snapshot.iter().any(|nu| nu != mu && super_dominance(mu, nu).unwrap_or(false)));
    uniq
}

/// Ideal of dominant weights generated by pairwise incomparable weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightIdeal {
    generators: Vec<SuperWeight>,
}

impl WeightIdeal {
    pub fn new(generators: Vec<SuperWeight>) -> Result<WeightIdeal> {
        for (i, a) in generators.iter().enumerate() {
            for b in &generators[i + 1..] {
                if super_dominance(a, b)? || super_dominance(b, a)? {
                    return Err(Error::InvalidArgument(format!("generators {a} and {b} are comparable")));
                }
            }
        }
        Ok(WeightIdeal { generators })
    }

    pub fn generators(&self) -> &[SuperWeight] {
        &self.generators
    }

    pub fn contains(&self, mu: &SuperWeight) -> bool {
        self.generators.iter().any(|g| super_dominance(mu, g).unwrap_or(false))
    }
}

/// Differences `Γ_k ∖ Γ_{k+1}` for `k < depth`: each next generator set is the
/// maximal part of all predecessors of the previous one.
pub fn ideal_chain(gamma: &WeightIdeal, depth: usize, height_bound: u32) -> Vec<Vec<SuperWeight>> {
    let mut gens = maximal(gamma.generators());
    let mut out = Vec::with_capacity(depth);
    for _ in 0..depth {
        out.push(gens.clone());
        let next: Vec<SuperWeight> = gens.iter().flat_map(|g| predecessors(g, height_bound)).collect();
        gens = maximal(&next);
    }
    out
}

/// Default search bound for [`predecessors`].
pub const DEFAULT_HEIGHT_BOUND: u32 = 4;

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn w(v: &[i64]) -> GLWeight {
        GLWeight::new(v.to_vec()).unwrap()
    }

    fn sw(a: &[i64], b: &[i64]) -> SuperWeight {
        SuperWeight::new(a.to_vec(), b.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&p(&[3, 1])), p(&[2, 1, 1]));
        assert_eq!(conjugate(&p(&[2, 2, 2])), p(&[3, 3]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_le(&[1, 1, 1], &[2, 1, 0]).unwrap());
        assert!(!dominance_le(&[3, 0, 0], &[2, 1, 0]).unwrap());
        assert!(dominance_le(&[2, 1, 0], &[2, 1, 0]).unwrap());
        assert!(dominance_le(&[1, 1], &[1, 1, 0]).is_err());
    }

    #[test]
    fn partition_order_examples() {
        assert!(partition_le(&p(&[2, 2, 2]), &p(&[3, 2, 1])).unwrap());
        assert!(partition_le(&p(&[5, 1]), &p(&[6])).unwrap());
        assert!(!partition_le(&p(&[6]), &p(&[5, 1])).unwrap());
        assert!(partition_le(&p(&[6]), &p(&[5])).is_err());
    }

    #[test]
    fn box_moving_listing() {
        let l: Vec<String> = list_partitions(3, 6).iter().map(|x| x.display_padded(3)).collect();
        assert_eq!(l, ["(2,2,2)", "(3,2,1)", "(3,3,0)", "(4,2,0)", "(5,1,0)", "(6,0,0)"]);
        assert_eq!(next_partition(&p(&[3, 2, 1]), 3), Some(p(&[3, 3])));
        assert_eq!(next_partition(&p(&[4, 2]), 3), Some(p(&[5, 1])));
        assert_eq!(next_partition(&p(&[6]), 3), None);
        assert_eq!(list_partitions(3, 0), vec![Partition::empty()]);
    }

    #[test]
    fn box_moving_is_ordered_subsequence() {
        for m in 1..=5 {
            for r in 0..=10 {
                let listing = list_partitions(m, r);
                let full = all_partitions_sorted(m, r);
                let mut pos = 0;
                for q in &listing {
                    let idx = full[pos..].iter().position(|x| x == q).expect("subsequence");
                    pos += idx + 1;
                }
                assert!(listing.windows(2).all(|w| partition_cmp(&w[0], &w[1]) == Ordering::Less));
                if m <= 2 {
                    assert_eq!(listing, full, "m={m} r={r}");
                }
            }
        }
    }

    #[test]
    fn sorted_listing_counts() {
        // partitions of 10 into at most 3 parts
        assert_eq!(all_partitions_sorted(3, 10).len(), 14);
        assert_eq!(all_partitions(8, 8).len(), 22);
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(tilde(&w(&[2, -1, -1])), (p(&[3]), -1));
        assert_eq!(tilde(&w(&[0, 0, 0])), (Partition::empty(), 0));
        assert_eq!(tilde(&w(&[4, -4, -4])), (p(&[8]), -4));
    }

    fn fmt_list(v: &[GLWeight]) -> String {
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }

    #[test]
    fn weight_order_examples() {
        assert_eq!(
            fmt_list(&gl_weight_order(3, 0, 12)),
            "(0,0,0),(1,0,-1),(2,-1,-1),(1,1,-2),(2,0,-2),(3,-1,-2),(4,-2,-2),(2,1,-3),(3,0,-3),(4,-1,-3),(5,-2,-3),(6,-3,-3)"
        );
        assert_eq!(
            fmt_list(&gl_weight_order(3, -4, 10)),
            "(-1,-1,-2),(0,-2,-2),(0,-1,-3),(1,-2,-3),(2,-3,-3),(0,0,-4),(1,-1,-4),(2,-2,-4),(3,-3,-4),(4,-4,-4)"
        );
        assert_eq!(
            fmt_list(&gl_weight_order(3, 4, 8)),
            "(2,1,1),(2,2,0),(3,1,0),(4,0,0),(3,2,-1),(4,1,-1),(5,0,-1),(6,-1,-1)"
        );
        assert_eq!(gl_weight_order(1, 5, 3), vec![w(&[5])]);
    }

    #[test]
    fn weight_index_matches_listing() {
        for (m, r) in [(1, 3), (2, 1), (3, 0), (3, -4), (2, -3)] {
            for (i, lam) in gl_weight_order(m, r, 25).iter().enumerate() {
                assert_eq!(gl_weight_index(lam), i, "{lam}");
            }
        }
    }

    #[test]
    fn weight_order_refines_dominance() {
        for (m, r) in [(2, 0), (3, 0), (3, 4), (4, 1)] {
            let l = gl_weight_order(m, r, 40);
            for a in 0..l.len() {
                for b in 0..l.len() {
                    if a != b && dominance_le(l[a].entries(), l[b].entries()).unwrap() {
                        assert!(a < b, "{} ⊴ {} but listed later", l[a], l[b]);
                    }
                }
            }
        }
    }

    #[test]
    fn weight_order_polynomial_block_matches_partition_order() {
        let r = 6;
        let polys: Vec<Partition> = gl_weight_order(3, r, 200)
            .into_iter()
            .filter(|x| x.is_polynomial())
            .map(|x| Partition::new(x.entries().iter().map(|&e| e as u32).collect()).unwrap())
            .collect();
        assert_eq!(polys, all_partitions_sorted(3, r as u32));
    }

    #[test]
    fn super_dominance_examples() {
        for k in 0..4 {
            let lam = sw(&[k], &[5 - k]);
            assert!(super_dominance(&sw(&[k - 1], &[6 - k]), &lam).unwrap());
            assert!(super_dominance(&lam, &lam).unwrap());
        }
        let lam = sw(&[2, 1], &[1, 0]);
        assert!(super_dominance(&lam.minus_alpha(1), &lam).unwrap());
    }

    #[test]
    fn strong_dominance_examples() {
        assert!(strong_dominance(&sw(&[1, 1], &[2]), &sw(&[2, 0], &[2])).unwrap());
        assert!(!strong_dominance(&sw(&[2, 0], &[2]), &sw(&[1, 1], &[2])).unwrap());
        assert!(strong_dominance(&sw(&[1, 1], &[2]), &sw(&[2], &[2])).is_err());
    }

    #[test]
    fn super_order_shape() {
        let l = super_weight_order(2, 2, 0, 0, 9);
        let pl = gl_weight_order(2, 0, 3);
        let ml = gl_weight_order(2, 0, 3);
        let pair = |j: usize, k: usize| SuperWeight { plus: pl[j - 1].clone(), minus: ml[k - 1].clone() };
        let expected = vec![
            pair(1, 1),
            pair(2, 1),
            pair(1, 2),
            pair(2, 2),
            pair(3, 1),
            pair(3, 2),
            pair(1, 3),
            pair(2, 3),
            pair(3, 3),
        ];
        assert_eq!(l, expected);
        let one = super_weight_order(1, 1, 3, 2, 5);
        assert_eq!(one, vec![sw(&[3], &[2])]);
    }

    #[test]
    fn super_order_refines_strong_dominance() {
        for (rp, rm) in [(0, 0), (2, 1), (1, -1)] {
            let l = super_weight_order(2, 2, rp, rm, 50);
            for a in 0..l.len() {
                for b in 0..l.len() {
                    if a != b && strong_dominance(&l[a], &l[b]).unwrap() {
                        assert!(a < b);
                    }
                }
            }
            for (i, x) in l.iter().enumerate() {
                for (j, y) in l.iter().enumerate() {
                    assert_eq!(super_order_cmp(x, y).unwrap(), i.cmp(&j));
                }
            }
        }
    }

    #[test]
    fn lex_order() {
        let a = sw(&[1, 0], &[1]);
        let b = sw(&[1, 0], &[1]);
        assert!(lex_le(&a, &b).unwrap());
        let c = sw(&[2, -1], &[1]);
        assert!(lex_le(&a, &c).unwrap());
        assert!(!lex_le(&c, &a).unwrap());
    }

    #[test]
    fn ev_order_round_robin() {
        let l = ev_order(1, 1, &[(0, 0), (1, 0)], 2);
        assert_eq!(l, vec![sw(&[0], &[0]), sw(&[1], &[0])]);
    }

    #[test]
    fn predecessors_gl11() {
        for k in -2..4 {
            let lam = sw(&[k], &[3 - k]);
            assert_eq!(predecessors(&lam, 4), vec![sw(&[k - 1], &[4 - k])]);
        }
    }

    #[test]
    fn predecessors_contain_alpha_shift() {
        for lam in [sw(&[1, 0], &[1]), sw(&[2, 1], &[0, -1]), sw(&[0, 0], &[0]), sw(&[3, 1], &[2, 2])] {
            let preds = predecessors(&lam, DEFAULT_HEIGHT_BOUND);
            assert!(preds.contains(&lam.minus_alpha(1)), "{lam}: {preds:?}");
            for a in &preds {
                assert!(super_dominance(a, &lam).unwrap() && a != &lam);
                for b in &preds {
                    if a != b {
                        assert!(!super_dominance(a, b).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn chain_gl11() {
        let lam = sw(&[2], &[1]);
        let chain = ideal_chain(&WeightIdeal::new(vec![lam.clone()]).unwrap(), 3, 4);
        assert_eq!(chain, vec![vec![lam.clone()], vec![sw(&[1], &[2])], vec![sw(&[0], &[3])]]);
    }

    #[test]
    fn chain_steps_go_down() {
        let g = WeightIdeal::new(vec![sw(&[1, 0], &[1]), sw(&[2, -1], &[1])]);
        assert!(g.is_err());
        let g = WeightIdeal::new(vec![sw(&[1, 0], &[1])]).unwrap();
        let chain = ideal_chain(&g, 4, 4);
        for pair in chain.windows(2) {
            for mu in &pair[1] {
                assert!(pair[0].iter().any(|g| super_dominance(mu, g).unwrap() && g != mu));
            }
        }
    }

    #[test]
    fn young_diagram_render() {
        assert_eq!(young_diagram(&p(&[2, 1])), "+-+-+\n| | |\n+-+-+\n| |\n+-+\n");
    }

    #[test]
    fn weight_json() {
        let lam = sw(&[1, 0], &[1]);
        let s = serde_json::to_string(&lam).unwrap();
        assert_eq!(s, "[[1,0],[1]]");
        assert_eq!(serde_json::from_str::<SuperWeight>(&s).unwrap(), lam);
        assert!(serde_json::from_str::<SuperWeight>("[[0,1],[1]]").is_err());
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(0u32..6, 0..6).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn conjugate_involution(p in arb_partition()) {
            prop_assert_eq!(conjugate(&conjugate(&p)), p);
        }

        #[test]
        fn strong_implies_plain(a in prop::collection::vec(-3i64..4, 2), b in prop::collection::vec(-3i64..4, 2), c in -3i64..4) {
            let mut a = a; a.sort_unstable_by(|x, y| y.cmp(x));
            let mut b = b; b.sort_unstable_by(|x, y| y.cmp(x));
            let s: i64 = a.iter().sum::<i64>() - b.iter().sum::<i64>();
            let mu = sw(&a, &[c]);
            let mut bb = b.clone(); bb[0] += s;
            if bb.windows(2).all(|w| w[0] >= w[1]) {
                let lam = sw(&bb, &[c]);
                if strong_dominance(&mu, &lam).unwrap() {
                    prop_assert!(super_dominance(&mu, &lam).unwrap());
                }
            }
        }
    }
}
