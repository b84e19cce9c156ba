//! Property checks across the physical operations.

use std::f64::consts::PI;

use casimir_core::oracle::{finite_difference_force, run_all, CheckKind, OracleConfig};
use casimir_core::{
    bosonic_massive_force_asymptotic, bosonic_massless_force, fermionic_massive_energy,
    fermionic_massive_force, fermionic_massive_force_asymptotic, fermionic_massless_force,
    massless_ratio, FieldSpec, Geometry, Numerics,
};
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn every_force_is_attractive_on_the_grid() {
    let numerics = Numerics::default();
    for d in [1.0, 2.0, 3.0, 4.0, 7.0] {
        for a in [0.1, 1.0, 10.0] {
            let g = Geometry::new(a, d).unwrap();
            let massless_f =
                fermionic_massless_force(&g, &FieldSpec::fermionic(0.0).unwrap(), true);
            let massless_b = bosonic_massless_force(&g, &FieldSpec::bosonic(0.0).unwrap(), true);
            assert!(massless_f.unwrap().value < 0.0);
            assert!(massless_b.unwrap().value < 0.0);
            for m in [0.5, 2.0, 20.0] {
                let fermion = FieldSpec::fermionic(m).unwrap();
                let boson = FieldSpec::bosonic(m).unwrap();
                let exact = fermionic_massive_force(&g, &fermion, true, &numerics).unwrap();
                assert!(exact.value < 0.0, "d={d} a={a} m={m}: {}", exact.value);
                assert!(
                    fermionic_massive_force_asymptotic(&g, &fermion, true)
                        .unwrap()
                        .value
                        < 0.0
                );
                assert!(
                    bosonic_massive_force_asymptotic(&g, &boson, true)
                        .unwrap()
                        .value
                        < 0.0
                );
                let e = fermionic_massive_energy(&g, &fermion, true, &numerics).unwrap();
                assert!(e.value < 0.0 && e.error_estimate >= 0.0);
            }
        }
    }
}

#[test]
fn oracle_reruns_are_bitwise_identical() {
    let config = OracleConfig::default();
    let first = run_all(&CheckKind::ALL, &config);
    let second = run_all(&CheckKind::ALL, &config);
    assert_eq!(first.len(), second.len());
    for (x, y) in first.iter().zip(&second) {
        assert_eq!(x.name, y.name);
        assert_eq!(x.reference_value.to_bits(), y.reference_value.to_bits());
        assert_eq!(x.oracle_value.to_bits(), y.oracle_value.to_bits());
        assert_eq!(x.passed, y.passed);
        assert_eq!(x.passed, x.relative_residual <= x.tolerance);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratio_identity(d in 1.0f64..10.0, a in 0.05f64..20.0) {
        let g = Geometry::new(a, d).unwrap();
        let f = fermionic_massless_force(&g, &FieldSpec::fermionic(0.0).unwrap(), true).unwrap();
        let b = bosonic_massless_force(&g, &FieldSpec::bosonic(0.0).unwrap(), true).unwrap();
        prop_assert!(rel(f.value / b.value, massless_ratio(d).unwrap()) < 1e-12);
    }

    #[test]
    fn massless_power_law(d in 1.0f64..8.0, a in 0.1f64..5.0, lambda in 0.2f64..5.0) {
        let g = Geometry::new(a, d).unwrap();
        let gs = Geometry::new(lambda * a, d).unwrap();
        for field in [FieldSpec::fermionic(0.0).unwrap(), FieldSpec::bosonic(0.0).unwrap()] {
            let f = casimir_core::force(&g, &field, true, Default::default(), &Numerics::default()).unwrap();
            let fs = casimir_core::force(&gs, &field, true, Default::default(), &Numerics::default()).unwrap();
            prop_assert!(rel(fs.value, lambda.powf(-(d + 1.0)) * f.value) < 1e-12);
        }
    }

    #[test]
    fn massive_scaling(d in 1.0f64..5.0, a in 0.3f64..3.0, m in 0.3f64..4.0, lambda in 0.5f64..3.0) {
        let numerics = Numerics::tight();
        let e = fermionic_massive_energy(&Geometry::new(a, d).unwrap(), &FieldSpec::fermionic(m).unwrap(), true, &numerics).unwrap();
        let es = fermionic_massive_energy(&Geometry::new(lambda * a, d).unwrap(), &FieldSpec::fermionic(m / lambda).unwrap(), true, &numerics).unwrap();
        prop_assert!(rel(es.value, lambda.powf(-d) * e.value) < 1e-10);
    }

    #[test]
    fn derivative_consistency(d in 1u32..6, a in 0.5f64..2.0, m in 0.3f64..3.0) {
        let numerics = Numerics::tight();
        let g = Geometry::new(a, d as f64).unwrap();
        let field = FieldSpec::fermionic(m).unwrap();
        let analytic = fermionic_massive_force(&g, &field, true, &numerics).unwrap().value;
        let step = 0.02 / (m + 1.0 / a);
        let fd = finite_difference_force(&g, &field, true, step, &numerics).unwrap();
        prop_assert!(rel(fd, analytic) < 1e-6, "fd {fd} analytic {analytic}");
    }
}

#[test]
fn seven_eighths_at_three_dimensions() {
    let g = Geometry::new(1.0, 3.0).unwrap();
    let f = fermionic_massless_force(&g, &FieldSpec::fermionic(0.0).unwrap(), true).unwrap();
    assert!(rel(f.value, -7.0 * PI * PI / 3840.0) < 1e-12);
}
