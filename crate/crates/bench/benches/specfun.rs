use std::hint::black_box;

use casimir_core::specfun::{
    bessel_k, bessel_k_half_integer, gamma, theta2, theta4, zeta, QuadratureControl, SeriesControl,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn bench_bessel(c: &mut Criterion) {
    let ctl = QuadratureControl::default();
    let mut group = c.benchmark_group("bessel_k");
    for z in [0.1, 1.0, 10.0, 100.0] {
        group.bench_with_input(BenchmarkId::new("quadrature_nu2", z), &z, |b, &z| {
            b.iter(|| bessel_k(black_box(2.0), black_box(z), &ctl))
        });
        group.bench_with_input(BenchmarkId::new("half_integer_nu2.5", z), &z, |b, &z| {
            b.iter(|| bessel_k_half_integer(black_box(2), black_box(z)))
        });
    }
    group.finish();
}

fn bench_gamma_zeta(c: &mut Criterion) {
    let ctl = SeriesControl::default();
    c.bench_function("gamma(3.7)", |b| b.iter(|| gamma(black_box(3.7))));
    c.bench_function("gamma(-2.3)", |b| b.iter(|| gamma(black_box(-2.3))));
    let mut group = c.benchmark_group("zeta");
    for s in [1.5, 2.0, 4.0, 9.0] {
        group.bench_with_input(BenchmarkId::from_parameter(s), &s, |b, &s| {
            b.iter(|| zeta(black_box(s), &ctl))
        });
    }
    group.finish();
}

fn bench_theta(c: &mut Criterion) {
    let ctl = SeriesControl::default();
    let mut group = c.benchmark_group("theta");
    for x in [0.01, 0.5, 4.0] {
        group.bench_with_input(BenchmarkId::new("theta2", x), &x, |b, &x| {
            b.iter(|| theta2(black_box(x), &ctl))
        });
        group.bench_with_input(BenchmarkId::new("theta4", x), &x, |b, &x| {
            b.iter(|| theta4(black_box(x), &ctl))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_bessel, bench_gamma_zeta, bench_theta);
criterion_main!(benches);
