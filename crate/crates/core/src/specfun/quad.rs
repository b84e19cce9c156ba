//! Step-halving trapezoid rule for analytic, log-concave integrands on the
//! real line.
//!
//! Integrands arrive as `ln f(u)` together with the location of the maximum
//! and a curvature width. The support is cut where `f` falls `TAIL_DEPTH`
//! e-folds below its peak; log-concavity guarantees the cut tails stay
//! below that level. On such integrands the trapezoid rule converges
//! exponentially in `1/h`, so the difference between two successive levels
//! bounds the error of the finer one.

use crate::error::{Error, Result};
use crate::specfun::QuadratureControl;

const TAIL_DEPTH: f64 = 50.0;
const MAX_TAIL_STEPS: usize = 128;
const MAX_INITIAL_NODES: usize = 1 << 16;

/// An integral held as `scaled * exp(log_scale)` so that values far
/// outside the `f64` exponent range of the integrand survive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub scaled: f64,
    pub log_scale: f64,
    /// Successive-level difference, in the same units as `scaled`.
    pub scaled_error: f64,
    pub levels: usize,
    pub evaluations: usize,
}

impl Integral {
    pub fn value(&self) -> f64 {
        self.scaled * self.log_scale.exp()
    }

    pub fn ln_value(&self) -> f64 {
        self.scaled.ln() + self.log_scale
    }

    pub fn error(&self) -> f64 {
        self.scaled_error * self.log_scale.exp()
    }
}

/// Integrates `exp(log_f(u))` over the real line.
///
/// `mode` must be the maximiser of `log_f`, and `width` a positive length
/// comparable to `1/sqrt(-log_f''(mode))`.
pub fn integrate_log_concave<F>(
    log_f: F,
    mode: f64,
    width: f64,
    ctl: &QuadratureControl,
    what: &'static str,
) -> Result<Integral>
where
    F: Fn(f64) -> f64,
{
    ctl.validate()?;
    if !mode.is_finite() {
        return Err(Error::invalid("quadrature mode", "a finite abscissa", mode));
    }
    if !(width > 0.0 && width.is_finite()) {
        return Err(Error::invalid("quadrature width", "finite and > 0", width));
    }
    let peak = log_f(mode);
    if !peak.is_finite() {
        return Err(Error::invalid("integrand at mode", "finite", peak));
    }

    let hi = tail_cut(&log_f, mode, width, peak, 1.0);
    let lo = tail_cut(&log_f, mode, width, peak, -1.0);
    let f = |u: f64| (log_f(u) - peak).exp();

    let nodes = (((hi - lo) / (0.5 * width)).ceil() as usize).clamp(8, MAX_INITIAL_NODES);
    let mut h = (hi - lo) / nodes as f64;
    let mut sum = 0.5 * (f(lo) + f(hi)) + (1..nodes).map(|k| f(lo + k as f64 * h)).sum::<f64>();
    let mut evaluations = nodes + 1;
    let mut estimate = h * sum;
    let mut intervals = nodes;

    for level in 1..=ctl.max_levels {
        let midpoints: f64 = (0..intervals).map(|k| f(lo + (k as f64 + 0.5) * h)).sum();
        evaluations += intervals;
        sum += midpoints;
        intervals *= 2;
        h *= 0.5;
        let refined = h * sum;
        let diff = (refined - estimate).abs();
        estimate = refined;
        if diff <= ctl.rel_tol * refined.abs() || diff * peak.exp() <= ctl.abs_tol {
            return Ok(Integral {
                scaled: refined,
                log_scale: peak,
                scaled_error: diff,
                levels: level,
                evaluations,
            });
        }
    }

    Err(Error::Convergence {
        what,
        limit: ctl.max_levels,
        unit: "refinement levels",
        estimate: estimate * peak.exp(),
        error: f64::NAN,
    })
}

fn tail_cut<F: Fn(f64) -> f64>(log_f: &F, mode: f64, width: f64, peak: f64, dir: f64) -> f64 {
    let mut step = width;
    for _ in 0..MAX_TAIL_STEPS {
        let u = mode + dir * step;
        let v = log_f(u);
        if !(v - peak > -TAIL_DEPTH) {
            return u;
        }
        step *= 1.5;
    }
    mode + dir * step
}
