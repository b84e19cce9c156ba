use std::hint::black_box;

use casimir_core::oracle::{
    energy_via_quadrature, run_all, CheckKind, OracleConfig, CANONICAL_IMAGES,
};
use casimir_core::{
    fermionic_massive_energy, fermionic_massive_force, fermionic_massive_force_asymptotic,
    FieldSpec, Geometry, Numerics,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn bench_massive_series(c: &mut Criterion) {
    let numerics = Numerics::default();
    let mut group = c.benchmark_group("massive_fermionic");
    for (d, ma) in [(3.0, 0.1), (3.0, 1.0), (3.0, 10.0), (2.0, 1.0), (6.0, 1.0)] {
        let g = Geometry::new(1.0, d).unwrap();
        let f = FieldSpec::fermionic(ma).unwrap();
        let id = format!("d={d},ma={ma}");
        group.bench_with_input(BenchmarkId::new("energy", &id), &(g, f), |b, (g, f)| {
            b.iter(|| fermionic_massive_energy(black_box(g), f, true, &numerics))
        });
        group.bench_with_input(BenchmarkId::new("force", &id), &(g, f), |b, (g, f)| {
            b.iter(|| fermionic_massive_force(black_box(g), f, true, &numerics))
        });
        group.bench_with_input(
            BenchmarkId::new("force_asymptotic", &id),
            &(g, f),
            |b, (g, f)| b.iter(|| fermionic_massive_force_asymptotic(black_box(g), f, true)),
        );
    }
    group.finish();
}

fn bench_oracles(c: &mut Criterion) {
    let numerics = Numerics::default();
    let g = Geometry::new(1.0, 3.0).unwrap();
    let f = FieldSpec::fermionic(1.0).unwrap();
    c.bench_function("energy_via_quadrature d=3 am=1", |b| {
        b.iter(|| energy_via_quadrature(black_box(&g), &f, CANONICAL_IMAGES, &numerics.quadrature))
    });
    let config = OracleConfig::default();
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("run_all", |b| b.iter(|| run_all(&CheckKind::ALL, &config)));
    group.finish();
}

criterion_group!(benches, bench_massive_series, bench_oracles);
criterion_main!(benches);
