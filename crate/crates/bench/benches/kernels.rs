use criterion::{criterion_group, criterion_main, Criterion};
use expolys_core::catalog::{self, GridConfig, RunOptions};
use expolys_core::combinatorics::{StirlingKind, StirlingTable};
use expolys_core::exact::{frac, rat};
use expolys_core::families::{
    apostol_bernoulli_by_series, apostol_euler_by_series, exponential_poly_by_recurrence,
};
use expolys_core::Series;
use std::hint::black_box;

// Family functions share a process-wide cache, so the family benches go
// through the uncached series routes.

fn stirling(c: &mut Criterion) {
    c.bench_function("stirling2 table n=200", |b| {
        b.iter(|| StirlingTable::with_bound(StirlingKind::Second, black_box(200)))
    });
    c.bench_function("stirling1 table n=200", |b| {
        b.iter(|| StirlingTable::with_bound(StirlingKind::FirstUnsigned, black_box(200)))
    });
}

fn series(c: &mut Criterion) {
    let base = Series::exp_linear(&rat(1), 40);
    c.bench_function("series inverse order 40", |b| {
        b.iter(|| black_box(&base).inverse().unwrap())
    });
    c.bench_function("series binomial power 5/2 order 40", |b| {
        b.iter(|| black_box(&base).binomial_power(&frac(5, 2)).unwrap())
    });
}

fn families(c: &mut Criterion) {
    c.bench_function("phi_30 by recurrence", |b| {
        b.iter(|| exponential_poly_by_recurrence(black_box(30)))
    });
    c.bench_function("apostol euler n=20 alpha=5/2", |b| {
        b.iter(|| {
            apostol_euler_by_series(black_box(20), &frac(5, 2), &frac(1, 3), &rat(2)).unwrap()
        })
    });
    c.bench_function("apostol bernoulli n=20 l=3", |b| {
        b.iter(|| apostol_bernoulli_by_series(black_box(20), 3, &frac(1, 3), &rat(-3)).unwrap())
    });
}

fn verify(c: &mut Criterion) {
    let ids = catalog::select(&["spivey".to_string()]).unwrap();
    let grid = GridConfig::default();
    let options = RunOptions {
        jobs: 1,
        ..Default::default()
    };
    c.bench_function("verify spivey default grid", |b| {
        b.iter(|| catalog::run_identities(&ids, &grid, &options))
    });
}

criterion_group!(benches, stirling, series, families, verify);
criterion_main!(benches);
