//! Timings for the series evaluators: the two diagonal schemes at the
//! flagship argument a = 1/5 across precisions, the row schemes for
//! comparison, and the dedicated L(-8, 2) series.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use hurwitz_core::dirichlet::l_minus8_2_fast;
use hurwitz_core::hurwitz::{zeta2_fast, zeta2_simple, zeta3_fast, zeta3_simple};
use hurwitz_core::numeric::rational::rat;
use hurwitz_core::PrecisionContext;

fn diagonal_series(c: &mut Criterion) {
    let a = rat(1, 5);
    let mut group = c.benchmark_group("diagonal");
    group.sample_size(10);
    for digits in [100usize, 1000, 2500] {
        let ctx = PrecisionContext::new(digits);
        group.bench_with_input(BenchmarkId::new("zeta2", digits), &ctx, |b, ctx| {
            b.iter(|| zeta2_fast(&a, ctx).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("zeta3", digits), &ctx, |b, ctx| {
            b.iter(|| zeta3_fast(&a, ctx).unwrap())
        });
    }
    group.finish();
}

fn row_series(c: &mut Criterion) {
    let a = rat(1, 5);
    let mut group = c.benchmark_group("row");
    group.sample_size(10);
    for digits in [100usize, 1000] {
        let ctx = PrecisionContext::new(digits);
        group.bench_with_input(BenchmarkId::new("zeta2", digits), &ctx, |b, ctx| {
            b.iter(|| zeta2_simple(&a, ctx).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("zeta3", digits), &ctx, |b, ctx| {
            b.iter(|| zeta3_simple(&a, ctx).unwrap())
        });
    }
    group.finish();
}

fn l_series(c: &mut Criterion) {
    let mut group = c.benchmark_group("l_minus8_2");
    group.sample_size(10);
    for digits in [100usize, 1000] {
        let ctx = PrecisionContext::new(digits);
        group.bench_with_input(BenchmarkId::new("dedicated", digits), &ctx, |b, ctx| {
            b.iter(|| l_minus8_2_fast(ctx).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, diagonal_series, row_series, l_series);
criterion_main!(benches);
