//! Independent verifiers for the analytic chain behind the Casimir formulas.
//!
//! Each check evaluates the same quantity along a second route and records
//! the relative residual in an [`OracleReport`]:
//!
//! - `energy_quadrature`: the heat-kernel integrals `∫ t^(−(d+3)/2) e^(−t − c²/t) dt`
//!   summed over images, with no Bessel function, against the series energy;
//! - `bessel`: `K_ν` by quadrature against the half-integer closed form;
//! - `theta`: both sides of `ν₂(1/(a²y)) = a√y ν₄(a²y)` by direct summation;
//! - `eta_zeta`: odd-`n` and alternating power sums by partial summation
//!   with Euler–Maclaurin tails, against `ζ`;
//! - `finite_difference`: Richardson-extrapolated `−ΔE/Δa` against the
//!   analytic force.

use std::f64::consts::{LN_2, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::casimir::{
    bosonic_massless_energy, fermionic_massive_energy, fermionic_massless_energy, force, FieldSpec,
    Geometry, MethodChoice, Statistics,
};
use crate::error::{Error, Result};
use crate::specfun::quad::integrate_log_concave;
use crate::specfun::{
    bessel_k, bessel_k_half_integer, theta2_direct, theta4_direct, zeta, Numerics,
    QuadratureControl, SeriesControl,
};

pub const THETA_TOLERANCE: f64 = 1e-10;
pub const ETA_ZETA_TOLERANCE: f64 = 1e-10;
pub const ENERGY_QUADRATURE_TOLERANCE: f64 = 1e-8;
pub const FINITE_DIFFERENCE_TOLERANCE: f64 = 1e-6;

/// Image count used by the canonical energy-quadrature grid.
pub const CANONICAL_IMAGES: usize = 40;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub name: String,
    pub reference_value: f64,
    pub oracle_value: f64,
    pub relative_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// Set when the check could not be evaluated.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl OracleReport {
    pub fn new(name: impl Into<String>, reference: f64, oracle: f64, tolerance: f64) -> Self {
        let residual = relative_residual(reference, oracle);
        Self {
            name: name.into(),
            reference_value: reference,
            oracle_value: oracle,
            relative_residual: residual,
            tolerance,
            passed: residual <= tolerance,
            error: None,
        }
    }

    pub fn failed(name: impl Into<String>, tolerance: f64, error: &Error) -> Self {
        Self {
            name: name.into(),
            reference_value: f64::NAN,
            oracle_value: f64::NAN,
            relative_residual: f64::INFINITY,
            tolerance,
            passed: false,
            error: Some(error.to_string()),
        }
    }

    fn from_result(name: String, tolerance: f64, result: Result<(f64, f64)>) -> Self {
        match result {
            Ok((reference, oracle)) => Self::new(name, reference, oracle, tolerance),
            Err(e) => Self::failed(name, tolerance, &e),
        }
    }
}

fn relative_residual(reference: f64, oracle: f64) -> f64 {
    let diff = (oracle - reference).abs();
    if reference == 0.0 {
        diff
    } else {
        diff / reference.abs()
    }
}

// ---------------------------------------------------------------------------
// Heat-kernel quadrature for the massive energy

/// Renormalized per-dof massive fermionic energy without Bessel functions:
/// `E = 2^(−d) a (m²/π)^ν Σ_{n=1}^{n_max} (−1)ⁿ I_n / 2`, where
/// `I_n = ∫₀^∞ t^(−(d+3)/2) exp(−t − a²n²m²/t) dt` is integrated directly.
/// The divergent `a`-independent image (`n = 0`) is dropped.
pub fn energy_via_quadrature(
    geometry: &Geometry,
    field: &FieldSpec,
    n_max: usize,
    qctl: &QuadratureControl,
) -> Result<f64> {
    if field.statistics() != Statistics::Fermionic {
        return Err(Error::WrongStatistics {
            expected: Statistics::Fermionic,
            found: field.statistics(),
        });
    }
    if field.is_massless() {
        return Err(Error::MasslessField);
    }
    if n_max < 1 {
        return Err(Error::invalid("n_max", ">= 1", n_max as f64));
    }
    let (a, m, d) = (geometry.separation(), field.mass(), geometry.dimension());
    let nu = 0.5 * (d + 1.0);
    let ln_prefactor = a.ln() - d * LN_2 + nu * (2.0 * m.ln() - PI.ln()) - LN_2;

    let mut sum = 0.0;
    let mut last = 0.0;
    for n in 1..=n_max {
        let c = a * n as f64 * m;
        let ln_integral = heat_kernel_integral(nu, c, qctl)?;
        let sign = if n % 2 == 1 { -1.0 } else { 1.0 };
        last = (ln_prefactor + ln_integral).exp();
        sum += sign * last;
    }
    if last > qctl.rel_tol * sum.abs() {
        return Err(Error::Convergence {
            what: "heat-kernel image sum",
            limit: n_max,
            unit: "images",
            estimate: sum,
            error: last,
        });
    }
    Ok(sum)
}

/// `ln ∫₀^∞ t^(−ν−1) exp(−t − c²/t) dt` with `t = e^u`.
fn heat_kernel_integral(nu: f64, c: f64, qctl: &QuadratureControl) -> Result<f64> {
    let c2 = c * c;
    let log_f = |u: f64| -nu * u - u.exp() - c2 * (-u).exp();
    // e^u solves e^(2u) + ν e^u − c² = 0; rationalised against cancellation.
    let root = 2.0 * c2 / (nu + (nu * nu + 4.0 * c2).sqrt());
    let mode = root.ln();
    let width = 1.0 / (root + c2 / root).sqrt();
    let integral = integrate_log_concave(log_f, mode, width, qctl, "heat-kernel quadrature")?;
    Ok(integral.ln_value())
}

// ---------------------------------------------------------------------------
// Theta modular identity

/// `ν₄(x)` from the Jacobi triple product
/// `Π_{n≥1} (1 − q^{2n})(1 − q^{2n−1})²`, `q = e^(−πx)`; every factor is
/// positive, so small values keep full relative precision.
fn theta4_product(x: f64) -> f64 {
    let q = (-PI * x).exp();
    let mut ln_product = 0.0;
    let mut k = 1i32;
    loop {
        let odd = q.powi(2 * k - 1);
        if odd < 1e-18 {
            break;
        }
        ln_product += (-q.powi(2 * k)).ln_1p() + 2.0 * (-odd).ln_1p();
        k += 1;
    }
    ln_product.exp()
}

/// Checks `ν₂(1/(a²y)) = a√y ν₄(a²y)`, both sides summed directly (the
/// `ν₄` side switches to its product form below `a²y = 0.5`).
pub fn theta_identity_check(a: f64, y: f64, ctl: &SeriesControl) -> Result<OracleReport> {
    if !(a > 0.0) || !(y > 0.0) {
        return Err(Error::invalid(
            "theta check point",
            "a > 0 and y > 0",
            a.min(y),
        ));
    }
    let x = a * a * y;
    let lhs = theta2_direct(1.0 / x, ctl)?.value;
    let theta4 = if x >= 0.5 {
        theta4_direct(x, ctl)?.value
    } else {
        theta4_product(x)
    };
    let rhs = a * y.sqrt() * theta4;
    Ok(OracleReport::new(
        format!("theta[a={a},y={y}]"),
        lhs,
        rhs,
        THETA_TOLERANCE,
    ))
}

// ---------------------------------------------------------------------------
// Eta / zeta identities

/// `Σ_{k≥0} (first + step·k)^(−s)` by 1000 explicit terms plus an
/// Euler–Maclaurin tail through the fifth derivative.
fn power_progression_sum(first: f64, step: f64, s: f64) -> f64 {
    const HEAD: usize = 1000;
    let f = |k: f64| (first + step * k).powf(-s);
    let head: f64 = (0..HEAD).map(|k| f(k as f64)).sum();
    let x = first + step * HEAD as f64;
    // j-th derivative in k: (−s)(−s−1)…(−s−j+1) step^j x^(−s−j)
    let derivative = |j: i32| {
        let falling: f64 = (0..j).map(|i| -s - i as f64).product();
        falling * step.powi(j) * x.powf(-s - j as f64)
    };
    let integral = x.powf(1.0 - s) / ((s - 1.0) * step);
    head + integral + 0.5 * derivative(0) - derivative(1) / 12.0 + derivative(3) / 720.0
        - derivative(5) / 30240.0
}

/// Checks `Σ_{odd n} n^(−s) = (1 − 2^(−s)) ζ(s)` and
/// `Σ (−1)ⁿ n^(−s) = −(1 − 2^(−d)) ζ(s)` at `s = d+1`; reports the worse one.
pub fn eta_zeta_check(d: u32, ctl: &SeriesControl) -> Result<OracleReport> {
    if d < 1 {
        return Err(Error::invalid("dimension", ">= 1", d as f64));
    }
    let s = d as f64 + 1.0;
    let zeta_s = zeta(s, ctl)?;
    let odd = power_progression_sum(1.0, 2.0, s);
    let even = power_progression_sum(2.0, 2.0, s);

    let odd_report = OracleReport::new(
        format!("eta_zeta[d={d},odd]"),
        (1.0 - (-s).exp2()) * zeta_s,
        odd,
        ETA_ZETA_TOLERANCE,
    );
    let alt_report = OracleReport::new(
        format!("eta_zeta[d={d},alternating]"),
        -(1.0 - (-(d as f64)).exp2()) * zeta_s,
        even - odd,
        ETA_ZETA_TOLERANCE,
    );
    let worst = if odd_report.relative_residual >= alt_report.relative_residual {
        odd_report
    } else {
        alt_report
    };
    Ok(OracleReport {
        name: format!("eta_zeta[d={d}]"),
        ..worst
    })
}

// ---------------------------------------------------------------------------
// Finite-difference force

/// `−∂E/∂a` by central differences at steps `h` and `h/2`, combined by one
/// Richardson level (`O(h⁴)`).
pub fn finite_difference_force(
    geometry: &Geometry,
    field: &FieldSpec,
    per_dof: bool,
    step: f64,
    numerics: &Numerics,
) -> Result<f64> {
    let a = geometry.separation();
    if !(step > 0.0 && step < 0.25 * a) {
        return Err(Error::invalid(
            "finite-difference step",
            "0 < h < a/4",
            step,
        ));
    }
    let energy_at = |sep: f64| -> Result<f64> {
        let g = geometry.with_separation(sep)?;
        let e = match (field.statistics(), field.is_massless()) {
            (Statistics::Fermionic, true) => fermionic_massless_energy(&g, field, per_dof)?,
            (Statistics::Bosonic, true) => bosonic_massless_energy(&g, field, per_dof)?,
            (_, false) => fermionic_massive_energy(&g, field, per_dof, numerics)?,
        };
        Ok(e.value)
    };
    let central =
        |h: f64| -> Result<f64> { Ok(-(energy_at(a + h)? - energy_at(a - h)?) / (2.0 * h)) };
    let coarse = central(step)?;
    let fine = central(0.5 * step)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

/// Step used by the canonical grid: small against both `a` and `1/m`.
pub fn default_step(geometry: &Geometry, field: &FieldSpec) -> f64 {
    let a = geometry.separation();
    0.02 / (field.mass() + 1.0 / a)
}

// ---------------------------------------------------------------------------
// Suite

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    EnergyQuadrature,
    Bessel,
    Theta,
    EtaZeta,
    FiniteDifference,
}

impl CheckKind {
    pub const ALL: [CheckKind; 5] = [
        CheckKind::EnergyQuadrature,
        CheckKind::Bessel,
        CheckKind::Theta,
        CheckKind::EtaZeta,
        CheckKind::FiniteDifference,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::EnergyQuadrature => "energy_quadrature",
            CheckKind::Bessel => "bessel",
            CheckKind::Theta => "theta",
            CheckKind::EtaZeta => "eta_zeta",
            CheckKind::FiniteDifference => "finite_difference",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = CheckKind::ALL.iter().map(|k| k.name()).collect();
                format!("unknown check '{s}' (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleConfig {
    pub numerics: Numerics,
    /// Multiplies every check tolerance.
    pub tolerance_scale: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            numerics: Numerics::default(),
            tolerance_scale: 1.0,
        }
    }
}

/// The canonical theta grid: three fixed points followed by 50 points of an
/// additive low-discrepancy sequence over `a ∈ [0.5, 3]`, `y ∈ [0.2, 5]`.
pub fn theta_grid() -> Vec<(f64, f64)> {
    let mut points = vec![(1.0, 1.0), (2.0, 0.3), (0.5, 5.0)];
    let (alpha, beta) = (0.618_033_988_749_894_9, 0.414_213_562_373_095_1);
    for k in 1..=50 {
        let u = (k as f64 * alpha).fract();
        let v = (k as f64 * beta).fract();
        points.push((0.5 + 2.5 * u, 0.2 + 4.8 * v));
    }
    points
}

/// `(d, am)` pairs of the canonical energy-quadrature grid, at `a = 1`.
pub fn energy_grid() -> Vec<(f64, f64)> {
    let mut grid = Vec::new();
    for d in [1.0, 2.0, 3.0, 4.0] {
        for am in [0.5, 1.0, 2.0, 5.0] {
            grid.push((d, am));
        }
    }
    grid
}

/// `(statistics, d, m, a)` points of the canonical finite-difference grid.
pub fn finite_difference_grid() -> Vec<(Statistics, f64, f64, f64)> {
    vec![
        (Statistics::Fermionic, 3.0, 2.0, 1.0),
        (Statistics::Fermionic, 1.0, 0.5, 1.0),
        (Statistics::Fermionic, 2.0, 1.0, 0.7),
        (Statistics::Fermionic, 4.0, 3.0, 1.5),
        (Statistics::Fermionic, 2.5, 0.8, 2.0),
        (Statistics::Fermionic, 3.0, 0.0, 1.0),
        (Statistics::Bosonic, 2.0, 0.0, 2.0),
    ]
}

const BESSEL_ORDERS: std::ops::RangeInclusive<u32> = 0..=5;
const BESSEL_ARGUMENTS: [f64; 4] = [0.1, 1.0, 5.0, 20.0];

/// Runs the selected checks on their canonical grids. Reports come back in
/// the fixed order of [`CheckKind::ALL`], independent of `selection` order;
/// failures are returned as reports, never as errors.
pub fn run_all(selection: &[CheckKind], config: &OracleConfig) -> Vec<OracleReport> {
    let scale = config.tolerance_scale;
    let numerics = &config.numerics;
    let mut reports = Vec::new();
    for kind in CheckKind::ALL.into_iter().filter(|k| selection.contains(k)) {
        match kind {
            CheckKind::EnergyQuadrature => {
                for (d, am) in energy_grid() {
                    let name = format!("energy_quadrature[d={d},am={am}]");
                    let tol = scale * ENERGY_QUADRATURE_TOLERANCE;
                    let result = (|| {
                        let g = Geometry::new(1.0, d)?;
                        let f = FieldSpec::fermionic(am)?;
                        let series = fermionic_massive_energy(&g, &f, true, numerics)?.value;
                        let quad =
                            energy_via_quadrature(&g, &f, CANONICAL_IMAGES, &numerics.quadrature)?;
                        Ok((series, quad))
                    })();
                    reports.push(OracleReport::from_result(name, tol, result));
                }
            }
            CheckKind::Bessel => {
                for n in BESSEL_ORDERS {
                    for z in BESSEL_ARGUMENTS {
                        let name = format!("bessel[nu={},z={z}]", n as f64 + 0.5);
                        let tol = scale * numerics.quadrature.rel_tol;
                        let result = (|| {
                            let closed = bessel_k_half_integer(n, z)?;
                            let quad = bessel_k(n as f64 + 0.5, z, &numerics.quadrature)?;
                            Ok((closed, quad))
                        })();
                        reports.push(OracleReport::from_result(name, tol, result));
                    }
                }
            }
            CheckKind::Theta => {
                for (a, y) in theta_grid() {
                    let report = theta_identity_check(a, y, &numerics.series).map(|r| {
                        OracleReport::new(
                            r.name,
                            r.reference_value,
                            r.oracle_value,
                            scale * r.tolerance,
                        )
                    });
                    reports.push(report.unwrap_or_else(|e| {
                        OracleReport::failed(
                            format!("theta[a={a},y={y}]"),
                            scale * THETA_TOLERANCE,
                            &e,
                        )
                    }));
                }
            }
            CheckKind::EtaZeta => {
                for d in 1..=8u32 {
                    let report = eta_zeta_check(d, &numerics.series).map(|r| OracleReport {
                        tolerance: scale * r.tolerance,
                        passed: r.relative_residual <= scale * r.tolerance,
                        ..r
                    });
                    reports.push(report.unwrap_or_else(|e| {
                        OracleReport::failed(
                            format!("eta_zeta[d={d}]"),
                            scale * ETA_ZETA_TOLERANCE,
                            &e,
                        )
                    }));
                }
            }
            CheckKind::FiniteDifference => {
                for (stats, d, m, a) in finite_difference_grid() {
                    let name = format!("finite_difference[{stats},d={d},m={m},a={a}]");
                    let tol = scale * FINITE_DIFFERENCE_TOLERANCE;
                    let result = (|| {
                        let g = Geometry::new(a, d)?;
                        let f = FieldSpec::new(stats, m, FieldSpec::default_dof(stats))?;
                        let analytic = force(&g, &f, true, MethodChoice::Exact, numerics)?.value;
                        let fd =
                            finite_difference_force(&g, &f, true, default_step(&g, &f), numerics)?;
                        Ok((analytic, fd))
                    })();
                    reports.push(OracleReport::from_result(name, tol, result));
                }
            }
        }
    }
    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::casimir::{fermionic_massive_energy_asymptotic, fermionic_massive_force};

    fn tight_series() -> SeriesControl {
        SeriesControl::new(1e-15, 100_000).unwrap()
    }

    #[test]
    fn report_flag_matches_residual() {
        let r = OracleReport::new("x", 2.0, 2.0 + 1e-9, 1e-9);
        assert!(r.passed);
        assert!((r.relative_residual - 5e-10).abs() < 1e-15);
        let r = OracleReport::new("x", 2.0, 2.1, 1e-9);
        assert!(!r.passed);
        let r = OracleReport::failed("x", 1.0, &Error::MasslessField);
        assert!(!r.passed && r.error.is_some());
    }

    #[test]
    fn quadrature_energy_matches_series() {
        let g = Geometry::new(1.0, 3.0).unwrap();
        let f = FieldSpec::fermionic(2.0).unwrap();
        let qctl = QuadratureControl::new(1e-12, 0.0, 20).unwrap();
        let oracle = energy_via_quadrature(&g, &f, 30, &qctl).unwrap();
        let series = fermionic_massive_energy(&g, &f, true, &Numerics::tight())
            .unwrap()
            .value;
        assert!(relative_residual(series, oracle) < 1e-8);
    }

    #[test]
    fn single_image_matches_bessel_form() {
        // I_1 = 2 K_2(2c) / c² at d = 3, c = am = 1.
        let qctl = QuadratureControl::new(1e-13, 0.0, 20).unwrap();
        let ln_i1 = heat_kernel_integral(2.0, 1.0, &qctl).unwrap();
        let bessel_form = 2.0 * bessel_k(2.0, 2.0, &qctl).unwrap();
        assert!(relative_residual(bessel_form, ln_i1.exp()) < 1e-12);
    }

    #[test]
    fn three_way_comparison_at_large_mass() {
        let g = Geometry::new(1.0, 3.0).unwrap();
        let f = FieldSpec::fermionic(10.0).unwrap();
        let qctl = QuadratureControl::default();
        let oracle = energy_via_quadrature(&g, &f, 5, &qctl).unwrap();
        let series = fermionic_massive_energy(&g, &f, true, &Numerics::default())
            .unwrap()
            .value;
        let asym = fermionic_massive_energy_asymptotic(&g, &f, true)
            .unwrap()
            .value;
        assert!(relative_residual(asym, oracle) < 0.25);
        assert!(relative_residual(asym, series) < 0.25);
    }

    #[test]
    fn too_few_images_is_reported() {
        let g = Geometry::new(1.0, 3.0).unwrap();
        let f = FieldSpec::fermionic(0.5).unwrap();
        let err = energy_via_quadrature(&g, &f, 3, &QuadratureControl::default()).unwrap_err();
        assert!(err.is_numerical());
        assert!(energy_via_quadrature(
            &g,
            &FieldSpec::fermionic(0.0).unwrap(),
            3,
            &QuadratureControl::default()
        )
        .is_err());
    }

    #[test]
    fn theta_triple_product_matches_direct_sum() {
        for x in [0.6, 1.0, 2.0] {
            let direct = theta4_direct(x, &tight_series()).unwrap().value;
            assert!(
                relative_residual(direct, theta4_product(x)) < 1e-14,
                "x={x}"
            );
        }
    }

    #[test]
    fn theta_examples() {
        let c = tight_series();
        let r = theta_identity_check(1.0, 1.0, &c).unwrap();
        assert!(r.relative_residual < 1e-12 && (r.reference_value - 0.9135791).abs() < 1e-7);
        assert!(
            theta_identity_check(2.0, 0.3, &c)
                .unwrap()
                .relative_residual
                < 1e-10
        );
        assert!(
            theta_identity_check(0.5, 5.0, &c)
                .unwrap()
                .relative_residual
                < 1e-10
        );
        assert!(
            theta_identity_check(0.5, 0.2, &c)
                .unwrap()
                .relative_residual
                < 1e-10
        );
    }

    #[test]
    fn eta_zeta_examples() {
        let c = tight_series();
        let odd3 = power_progression_sum(1.0, 2.0, 4.0);
        assert!((odd3 - 1.0146780).abs() < 1e-7);
        let r3 = eta_zeta_check(3, &c).unwrap();
        assert!(r3.passed && r3.relative_residual < 1e-10);
        let r1 = eta_zeta_check(1, &c).unwrap();
        assert!(r1.relative_residual < 1e-10);
        let alt1 = power_progression_sum(2.0, 2.0, 2.0) - power_progression_sum(1.0, 2.0, 2.0);
        assert!(relative_residual(-PI * PI / 12.0, alt1) < 1e-12);
        assert!(eta_zeta_check(7, &c).unwrap().relative_residual < 1e-12);
    }

    #[test]
    fn finite_difference_examples() {
        let n = Numerics::tight();
        let g = Geometry::new(1.0, 3.0).unwrap();
        let f = FieldSpec::fermionic(2.0).unwrap();
        let fd = finite_difference_force(&g, &f, true, default_step(&g, &f), &n).unwrap();
        let analytic = fermionic_massive_force(&g, &f, true, &n).unwrap().value;
        assert!(relative_residual(analytic, fd) < 1e-6);

        let massless = FieldSpec::fermionic(0.0).unwrap();
        let fd = finite_difference_force(&g, &massless, true, 0.002, &n).unwrap();
        assert!(relative_residual(-7.0 * PI * PI / 3840.0, fd) < 1e-8);

        assert!(finite_difference_force(&g, &f, true, 0.3, &n).is_err());
    }

    #[test]
    fn richardson_error_shrinks_sixteenfold() {
        let g = Geometry::new(1.0, 3.0).unwrap();
        let f = FieldSpec::fermionic(0.0).unwrap();
        let n = Numerics::default();
        let exact = -7.0 * PI * PI / 3840.0;
        let e1 = (finite_difference_force(&g, &f, true, 0.2, &n).unwrap() - exact).abs();
        let e2 = (finite_difference_force(&g, &f, true, 0.1, &n).unwrap() - exact).abs();
        let ratio = e1 / e2;
        assert!((12.0..20.0).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn selection_filters_and_orders() {
        let config = OracleConfig::default();
        assert!(run_all(&[], &config).is_empty());
        let theta = run_all(&[CheckKind::Theta], &config);
        assert_eq!(theta.len(), theta_grid().len());
        assert!(theta.iter().all(|r| r.name.starts_with("theta[")));
        let both = run_all(&[CheckKind::Theta, CheckKind::EtaZeta], &config);
        assert!(both[0].name.starts_with("theta["));
        assert!(both.last().unwrap().name.starts_with("eta_zeta["));
    }

    #[test]
    fn check_names_round_trip() {
        for kind in CheckKind::ALL {
            assert_eq!(kind.name().parse::<CheckKind>().unwrap(), kind);
        }
        assert!("nope".parse::<CheckKind>().is_err());
    }
}
