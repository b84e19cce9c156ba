use std::f64::consts::LN_2;

use crate::error::{Error, Result};
use crate::specfun::{SeriesControl, SeriesSum};

/// Dirichlet eta `η(s) = Σ (−1)^(n+1) n^(−s)` for `s > 0`.
pub fn dirichlet_eta(s: f64, ctl: &SeriesControl) -> Result<f64> {
    eta_series(s, ctl).map(|sum| sum.value)
}

/// Riemann zeta for `s > 1`, through `ζ(s) = η(s) / (1 − 2^(1−s))`.
pub fn zeta(s: f64, ctl: &SeriesControl) -> Result<f64> {
    zeta_series(s, ctl).map(|sum| sum.value)
}

/// Zeta with the eta truncation bound carried through the `1 − 2^(1−s)` factor.
pub fn zeta_series(s: f64, ctl: &SeriesControl) -> Result<SeriesSum> {
    if !(s > 1.0) {
        return Err(Error::invalid("zeta argument", "> 1", s));
    }
    let eta = eta_series(s, ctl)?;
    let factor = -((1.0 - s) * LN_2).exp_m1();
    Ok(SeriesSum {
        value: eta.value / factor,
        error_estimate: eta.error_estimate / factor,
        terms: eta.terms,
    })
}

/// Eta with its truncation data.
///
/// The alternating series is accelerated by the Euler transform, realised as
/// repeated averaging of neighbouring partial sums. For completely monotone
/// terms such as `n^(−s)` the averaged error shrinks at least geometrically
/// with ratio ½ and keeps one sign, so the last successive difference bounds
/// it. When the raw terms fall off faster than that (large `s`), the plain
/// partial sum is returned with the first omitted term as its bound.
pub fn eta_series(s: f64, ctl: &SeriesControl) -> Result<SeriesSum> {
    ctl.validate()?;
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::invalid("eta argument", "finite and > 0", s));
    }

    let term = |n: usize| (n as f64).powf(-s);
    // table[j] holds the j-fold average of the partial sums ending at n.
    let mut table: Vec<f64> = Vec::new();
    let mut partial = 0.0;
    let mut previous = f64::NAN;

    for n in 1..=ctl.max_terms {
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        partial += sign * term(n);

        let mut carry = partial;
        for slot in table.iter_mut() {
            let next = 0.5 * (*slot + carry);
            *slot = carry;
            carry = next;
        }
        table.push(carry);
        let averaged = carry;

        let omitted = term(n + 1);
        if omitted <= ctl.rel_tol * partial.abs() {
            return Ok(SeriesSum {
                value: partial,
                error_estimate: omitted,
                terms: n,
            });
        }
        let diff = (averaged - previous).abs();
        if diff <= ctl.rel_tol * averaged.abs() {
            return Ok(SeriesSum {
                value: averaged,
                error_estimate: diff,
                terms: n,
            });
        }
        previous = averaged;
    }

    Err(Error::Convergence {
        what: "Dirichlet eta series",
        limit: ctl.max_terms,
        unit: "terms",
        estimate: previous,
        error: f64::NAN,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn tight() -> SeriesControl {
        SeriesControl::new(1e-14, 10_000).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    /// Σ_{n≤N} n^{-s} plus the Euler–Maclaurin tail ∫_N^∞ − f(N)/2 + f'(N)/12 …
    fn zeta_by_partial_sum(s: f64) -> f64 {
        let n_max = 2000usize;
        let head: f64 = (1..=n_max).map(|n| (n as f64).powf(-s)).sum();
        let n = n_max as f64;
        let integral = n.powf(1.0 - s) / (s - 1.0);
        let f = n.powf(-s);
        let df = -s * n.powf(-s - 1.0);
        let d3f = -s * (s + 1.0) * (s + 2.0) * n.powf(-s - 3.0);
        head + integral - 0.5 * f - df / 12.0 + d3f / 720.0
    }

    #[test]
    fn classical_zeta_values() {
        assert!(rel(zeta(2.0, &tight()).unwrap(), PI * PI / 6.0) < 1e-13);
        assert!(rel(zeta(4.0, &tight()).unwrap(), PI.powi(4) / 90.0) < 1e-13);
    }

    #[test]
    fn zeta_three_against_partial_summation() {
        let oracle = zeta_by_partial_sum(3.0);
        assert!((oracle - 1.2020569).abs() < 1e-7);
        assert!(rel(zeta(3.0, &tight()).unwrap(), oracle) < 1e-12);
    }

    #[test]
    fn zeta_matches_partial_summation_over_range() {
        for s in [1.5, 2.5, 3.7, 6.0, 9.0, 13.0] {
            let oracle = zeta_by_partial_sum(s);
            let value = zeta(s, &tight()).unwrap();
            assert!(rel(value, oracle) < 1e-11, "s = {s}: {value} vs {oracle}");
        }
    }

    #[test]
    fn classical_eta_values() {
        assert!(rel(dirichlet_eta(2.0, &tight()).unwrap(), PI * PI / 12.0) < 1e-13);
        assert!(rel(dirichlet_eta(1.0, &tight()).unwrap(), LN_2) < 1e-13);
        let eta4 = 7.0 / 8.0 * PI.powi(4) / 90.0;
        assert!((eta4 - 0.9470328).abs() < 1e-7);
        assert!(rel(dirichlet_eta(4.0, &tight()).unwrap(), eta4) < 1e-13);
    }

    #[test]
    fn eta_small_argument() {
        // η(1/2) = (1 − √2) ζ(1/2), ζ(1/2) = −1.4603545088095868
        let expected = (1.0 - 2f64.sqrt()) * -1.460_354_508_809_586_8;
        assert!(rel(dirichlet_eta(0.5, &tight()).unwrap(), expected) < 1e-12);
    }

    #[test]
    fn eta_zeta_bridge() {
        for d in 1..=12 {
            let s = d as f64 + 1.0;
            let lhs = dirichlet_eta(s, &SeriesControl::default()).unwrap();
            let rhs = (1.0 - 2f64.powi(-d)) * zeta(s, &SeriesControl::default()).unwrap();
            assert!(rel(lhs, rhs) < 1e-10, "d = {d}");
        }
    }

    #[test]
    fn truncation_error_is_a_bound() {
        for s in [0.3, 1.0, 2.0, 4.0, 11.0] {
            let loose = eta_series(s, &SeriesControl::new(1e-6, 10_000).unwrap()).unwrap();
            let exact = eta_series(s, &tight()).unwrap().value;
            assert!(
                (loose.value - exact).abs() <= loose.error_estimate,
                "s = {s}: err {} > {}",
                (loose.value - exact).abs(),
                loose.error_estimate
            );
        }
    }

    #[test]
    fn domain_and_cap_errors() {
        assert!(zeta(1.0, &tight()).is_err());
        assert!(zeta(0.5, &tight()).is_err());
        assert!(dirichlet_eta(0.0, &tight()).is_err());
        let capped = SeriesControl::new(1e-14, 3).unwrap();
        assert!(matches!(
            dirichlet_eta(1.0, &capped),
            Err(Error::Convergence { .. })
        ));
    }
}
