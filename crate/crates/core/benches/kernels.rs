//! Run once with default features and once with `--no-default-features`
//! to compare the rayon path against the sequential fallback; the group
//! names carry the active mode so criterion keeps the baselines apart.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use logseries::{harness, par, series};

fn mode() -> &'static str {
    if par::is_parallel() {
        "parallel"
    } else {
        "sequential"
    }
}

fn powers(c: &mut Criterion) {
    let mut group = c.benchmark_group(format!("int_pow/{}", mode()));
    group.sample_size(10);
    for &(t, order) in &[(9i64, 64usize), (25, 200), (-49, 288)] {
        let f = series::log_series(order);
        group.bench_with_input(
            BenchmarkId::new(format!("t={t}"), order),
            &(f, t),
            |b, (f, t)| b.iter(|| series::int_pow(black_box(f), *t).unwrap()),
        );
    }
    group.finish();
}

fn products(c: &mut Criterion) {
    let mut group = c.benchmark_group(format!("mul/{}", mode()));
    group.sample_size(10);
    for &order in &[32usize, 128, 512] {
        let f = series::log_power(3, order).unwrap();
        let g = series::log_power(-2, order).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(order), &(f, g), |b, (f, g)| {
            b.iter(|| series::mul(black_box(f), black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn reciprocals(c: &mut Criterion) {
    let mut group = c.benchmark_group(format!("reciprocal/{}", mode()));
    group.sample_size(10);
    for &order in &[64usize, 256] {
        let f = series::log_series(order);
        group.bench_with_input(BenchmarkId::from_parameter(order), &f, |b, f| {
            b.iter(|| series::reciprocal(black_box(f)).unwrap())
        });
    }
    group.finish();
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group(format!("sweep/{}", mode()));
    group.sample_size(10);
    group.bench_function("valuation table p=5 t=25", |b| {
        b.iter(|| harness::verify_main(5, black_box(25), 25).unwrap())
    });
    group.bench_function("zero coefficients m<=30", |b| {
        b.iter(|| harness::verify_zero_coeffs(black_box(30)).unwrap())
    });
    group.bench_function("multinomial 500 samples", |b| {
        b.iter(|| harness::verify_multinomial_random(500, black_box(7)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, powers, products, reciprocals, sweeps);
criterion_main!(benches);
