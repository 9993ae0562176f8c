use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use superfilt_core::bidet::{straighten, Bidet, BlockSide, GenBidet, Tableau};
use superfilt_core::filtration::{c_leq_vectors_truncated, verify_closure, SpanMatrix};
use superfilt_core::superderive::{derive, Derivation};
use superfilt_core::weightcomb::SuperWeight;
use superfilt_core::{parse_expr, SuperRing};

fn closure(c: &mut Criterion) {
    let ring = SuperRing::with(1, 1, 0).unwrap();
    let lambda = SuperWeight::new(vec![2], vec![1]).unwrap();
    c.bench_function("closure (1|1) lmax 3", |b| b.iter(|| verify_closure(&ring, black_box(&lambda), 3).unwrap()));
}

fn span(c: &mut Criterion) {
    let ring = SuperRing::with(2, 1, 0).unwrap();
    let lambda = SuperWeight::new(vec![1, 0], vec![1]).unwrap();
    let vectors: Vec<_> =
        c_leq_vectors_truncated(&ring, &lambda, 1).unwrap().iter().map(|v| v.expansion().clone()).collect();
    c.bench_function("span echelon (2|1)", |b| {
        b.iter_batched(|| vectors.clone(), |vs| SpanMatrix::from_vectors(&ring, &vs, false).unwrap(), BatchSize::LargeInput)
    });
}

fn straightening(c: &mut Criterion) {
    let ring = SuperRing::with(3, 1, 0).unwrap();
    let left = Tableau::new(vec![vec![2, 3], vec![1]]).unwrap();
    let right = Tableau::new(vec![vec![1, 2], vec![3]]).unwrap();
    let g = GenBidet::new(Bidet::new(BlockSide::Plus, left, right).unwrap(), 0);
    c.bench_function("straighten shape (2,1) m=3", |b| b.iter(|| straighten(&ring, black_box(&g), None).unwrap()));
}

fn derivation(c: &mut Criterion) {
    let ring = SuperRing::with(2, 2, 0).unwrap();
    let f = parse_expr("(x[1,1]*x[2,2] - x[1,2]*x[2,1])^3 * x[1,3] * x[4,2] * D1^-2", &ring).unwrap();
    let d = Derivation::right(ring.spec(), 1, 3).unwrap();
    c.bench_function("derive (2|2) odd", |b| b.iter(|| derive(&d, black_box(&f))));
}

criterion_group!(benches, closure, span, straightening, derivation);
criterion_main!(benches);
