//! Timings for the continued-fraction evaluators: backward recurrence at
//! depths matched to target precisions, against the forward recurrence at
//! a fixed depth.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use hurwitz_core::contfrac::{eval_cf_backward, eval_cf_forward, zeta2_cf_spec, zeta3_cf_spec};
use hurwitz_core::PrecisionContext;

fn backward(c: &mut Criterion) {
    let mut group = c.benchmark_group("backward");
    group.sample_size(10);
    // Depths sized for roughly 100 and 1000 digits at the two rates
    // (1.80 and 3.01 digits per level).
    for (digits, depth2, depth3) in [(100usize, 70u64, 45u64), (1000, 580, 350)] {
        let ctx = PrecisionContext::new(digits);
        group.bench_with_input(BenchmarkId::new("zeta2", digits), &ctx, |b, ctx| {
            let spec = zeta2_cf_spec();
            b.iter(|| eval_cf_backward(&spec, depth2, ctx).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("zeta3", digits), &ctx, |b, ctx| {
            let spec = zeta3_cf_spec();
            b.iter(|| eval_cf_backward(&spec, depth3, ctx).unwrap())
        });
    }
    group.finish();
}

fn forward(c: &mut Criterion) {
    let mut group = c.benchmark_group("forward");
    group.sample_size(10);
    let ctx = PrecisionContext::new(100);
    group.bench_with_input(BenchmarkId::new("zeta2", 70u64), &ctx, |b, ctx| {
        let spec = zeta2_cf_spec();
        b.iter(|| eval_cf_forward(&spec, 70, ctx).unwrap())
    });
    group.bench_with_input(BenchmarkId::new("zeta3", 45u64), &ctx, |b, ctx| {
        let spec = zeta3_cf_spec();
        b.iter(|| eval_cf_forward(&spec, 45, ctx).unwrap())
    });
    group.finish();
}

criterion_group!(benches, backward, forward);
criterion_main!(benches);
