//! Jacobi theta functions in the heat-kernel normalisation
//! `ν₂(x) = Σ exp[−π(n−½)²x]` and `ν₄(x) = Σ (−1)ⁿ exp(−πn²x)`, both over
//! all integers `n`, related by `ν₂(x) = x^(−½) ν₄(1/x)`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::{SeriesControl, SeriesSum};

/// Below this argument `theta2` evaluates through the modular map.
pub const THETA2_MODULAR_BELOW: f64 = 0.05;
/// Below this argument `theta4` evaluates through the modular map; the
/// direct alternating sum would cancel down to a small value there.
pub const THETA4_MODULAR_BELOW: f64 = 1.0;

pub fn theta2(x: f64, ctl: &SeriesControl) -> Result<f64> {
    check_arg(x)?;
    if x < THETA2_MODULAR_BELOW {
        Ok(x.powf(-0.5) * theta4_direct(1.0 / x, ctl)?.value)
    } else {
        Ok(theta2_direct(x, ctl)?.value)
    }
}

pub fn theta4(x: f64, ctl: &SeriesControl) -> Result<f64> {
    check_arg(x)?;
    if x < THETA4_MODULAR_BELOW {
        Ok(x.powf(-0.5) * theta2_direct(1.0 / x, ctl)?.value)
    } else {
        Ok(theta4_direct(x, ctl)?.value)
    }
}

fn check_arg(x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::invalid("theta argument", "finite and > 0", x));
    }
    Ok(())
}

/// `2 Σ_{n≥1} exp[−π(n−½)²x]`, stopped once the next term drops below
/// `rel_tol` times the partial sum.
pub fn theta2_direct(x: f64, ctl: &SeriesControl) -> Result<SeriesSum> {
    check_arg(x)?;
    ctl.validate()?;
    let term = |n: usize| {
        let k = n as f64 - 0.5;
        2.0 * (-PI * k * k * x).exp()
    };
    let mut sum = 0.0;
    for n in 1..=ctl.max_terms {
        sum += term(n);
        let next = term(n + 1);
        if next <= ctl.rel_tol * sum {
            // Positive terms with shrinking ratios: the tail is dominated by
            // a geometric series started at `next`.
            let ratio = if next > 0.0 { term(n + 2) / next } else { 0.0 };
            return Ok(SeriesSum {
                value: sum,
                error_estimate: next / (1.0 - ratio),
                terms: n,
            });
        }
    }
    Err(Error::Convergence {
        what: "theta2 series",
        limit: ctl.max_terms,
        unit: "terms",
        estimate: sum,
        error: term(ctl.max_terms + 1),
    })
}

/// `1 + 2 Σ_{n≥1} (−1)ⁿ exp(−πn²x)` with the same stopping rule.
pub fn theta4_direct(x: f64, ctl: &SeriesControl) -> Result<SeriesSum> {
    check_arg(x)?;
    ctl.validate()?;
    let term = |n: usize| {
        let k = n as f64;
        2.0 * (-PI * k * k * x).exp()
    };
    let mut sum = 1.0;
    for n in 1..=ctl.max_terms {
        let sign = if n % 2 == 1 { -1.0 } else { 1.0 };
        sum += sign * term(n);
        let next = term(n + 1);
        if next <= ctl.rel_tol * sum.abs() {
            return Ok(SeriesSum {
                value: sum,
                error_estimate: next,
                terms: n,
            });
        }
    }
    Err(Error::Convergence {
        what: "theta4 series",
        limit: ctl.max_terms,
        unit: "terms",
        estimate: sum,
        error: term(ctl.max_terms + 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tight() -> SeriesControl {
        SeriesControl::new(1e-15, 100_000).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    /// Symmetric sum over n ∈ [−N, N], no truncation rule.
    fn brute(x: f64, shift: f64, alternating: bool) -> f64 {
        (-200i64..=200)
            .map(|n| {
                let k = n as f64 - shift;
                let sign = if alternating && n % 2 != 0 { -1.0 } else { 1.0 };
                sign * (-PI * k * k * x).exp()
            })
            .sum()
    }

    #[test]
    fn theta2_values() {
        let two_terms = 2.0 * (-PI).exp() + 2.0 * (-9.0 * PI).exp();
        assert!(rel(theta2(4.0, &tight()).unwrap(), two_terms) < 1e-14);
        assert!(rel(theta2(4.0, &tight()).unwrap(), brute(4.0, 0.5, false)) < 1e-14);
        let at_one = theta2(1.0, &tight()).unwrap();
        assert!((at_one - 0.9135791).abs() < 1e-7);
        assert!(rel(at_one, brute(1.0, 0.5, false)) < 1e-14);
    }

    #[test]
    fn theta2_dominant_pair() {
        let x: f64 = 40.0;
        let r = theta2(x, &tight()).unwrap() * (PI * x / 4.0).exp() / 2.0;
        assert!((r - 1.0).abs() < 1e-15);
    }

    #[test]
    fn theta4_values() {
        let at_one = theta4(1.0, &tight()).unwrap();
        assert!((at_one - 0.9135791).abs() < 1e-7);
        assert!(rel(at_one, brute(1.0, 0.0, true)) < 1e-14);
        assert!(rel(at_one, theta2(1.0, &tight()).unwrap()) < 1e-14);
        assert!((theta4(30.0, &tight()).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn small_arguments_match_brute_force() {
        // theta2 has positive terms; brute summation is accurate at any x.
        for x in [0.01, 0.03, 0.049, 0.051, 0.2] {
            assert!(
                rel(theta2(x, &tight()).unwrap(), brute(x, 0.5, false)) < 1e-13,
                "x={x}"
            );
        }
        // theta4 at x = 0.5 is O(0.1): brute alternating sum still has ~15 digits.
        assert!(rel(theta4(0.5, &tight()).unwrap(), brute(0.5, 0.0, true)) < 1e-13);
    }

    #[test]
    fn modular_identity_at_sample_point() {
        let (a, y) = (2.0f64, 0.3f64);
        let lhs = theta2(1.0 / (a * a * y), &tight()).unwrap();
        let rhs = a * y.sqrt() * theta4(a * a * y, &tight()).unwrap();
        assert!(rel(lhs, rhs) < 1e-12);
    }

    #[test]
    fn truncation_error_is_a_bound() {
        let loose = SeriesControl::new(1e-4, 1000).unwrap();
        for x in [0.06, 0.3, 1.0, 2.5] {
            let t2 = theta2_direct(x, &loose).unwrap();
            let exact2 = theta2_direct(x, &tight()).unwrap().value;
            assert!(
                (t2.value - exact2).abs() <= t2.error_estimate,
                "theta2 x={x}"
            );
        }
        for x in [1.0, 0.3, 2.5] {
            let t4 = theta4_direct(x, &loose).unwrap();
            let exact4 = theta4_direct(x, &tight()).unwrap().value;
            assert!(
                (t4.value - exact4).abs() <= t4.error_estimate,
                "theta4 x={x}"
            );
        }
    }

    #[test]
    fn errors() {
        assert!(theta2(0.0, &tight()).is_err());
        assert!(theta4(-1.0, &tight()).is_err());
        let capped = SeriesControl::new(1e-15, 2).unwrap();
        assert!(matches!(
            theta2_direct(0.01, &capped),
            Err(Error::Convergence { .. })
        ));
    }
}
