//! Modified Bessel function of the second kind, `K_ν(z)`, for real order
//! and positive argument.
//!
//! The general evaluator integrates
//! `K_ν(z) = ½ ∫₀^∞ exp[−(z/2)(t + 1/t)] t^(−ν−1) dt`
//! after `t = e^u`, which turns it into `½ ∫ exp(−z cosh u − ν u) du` over
//! the whole line. Half-integer orders also have a terminating closed form.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::quad::{integrate_log_concave, Integral};
use crate::specfun::QuadratureControl;

pub fn bessel_k(nu: f64, z: f64, ctl: &QuadratureControl) -> Result<f64> {
    Ok(ln_bessel_k(nu, z, ctl)?.exp())
}

/// `e^z K_ν(z)`.
pub fn bessel_k_scaled(nu: f64, z: f64, ctl: &QuadratureControl) -> Result<f64> {
    let integral = bessel_integral(nu, z, ctl)?;
    Ok(0.5 * integral.value())
}

/// `ln K_ν(z)`; finite even where `K_ν(z)` itself underflows.
pub fn ln_bessel_k(nu: f64, z: f64, ctl: &QuadratureControl) -> Result<f64> {
    let integral = bessel_integral(nu, z, ctl)?;
    Ok((0.5 * integral.scaled).ln() + integral.log_scale - z)
}

fn check_args(nu: f64, z: f64) -> Result<()> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::invalid("Bessel argument z", "finite and > 0", z));
    }
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(Error::invalid("Bessel order", "finite and >= 0", nu));
    }
    Ok(())
}

fn bessel_integral(nu: f64, z: f64, ctl: &QuadratureControl) -> Result<Integral> {
    check_args(nu, z)?;
    // cosh u − 1 = 2 sinh²(u/2) keeps the e^z scaling exact near u = 0.
    let log_f = |u: f64| {
        let s = (0.5 * u).sinh();
        -2.0 * z * s * s - nu * u
    };
    let mode = -(nu / z).asinh();
    let width = (z * z + nu * nu).powf(-0.25);
    integrate_log_concave(log_f, mode, width, ctl, "Bessel K quadrature")
}

/// `K_{n+½}(z)` from the terminating sum
/// `√(π/2z) e^(−z) Σ_{j=0}^{n} (n+j)! / (j! (n−j)! (2z)^j)`.
pub fn bessel_k_half_integer(half_order: u32, z: f64) -> Result<f64> {
    Ok(ln_bessel_k_half_integer(half_order, z)?.exp())
}

pub fn bessel_k_half_integer_scaled(half_order: u32, z: f64) -> Result<f64> {
    Ok((0.5 * PI / z).sqrt() * half_integer_poly(half_order, z)?)
}

pub fn ln_bessel_k_half_integer(half_order: u32, z: f64) -> Result<f64> {
    let poly = half_integer_poly(half_order, z)?;
    Ok(0.5 * (0.5 * PI / z).ln() + poly.ln() - z)
}

fn half_integer_poly(n: u32, z: f64) -> Result<f64> {
    check_args(n as f64 + 0.5, z)?;
    let n = n as f64;
    let mut coeff = 1.0;
    let mut sum = 1.0;
    let mut j = 0.0;
    while j < n {
        coeff *= (n + j + 1.0) * (n - j) / ((j + 1.0) * 2.0 * z);
        sum += coeff;
        j += 1.0;
    }
    Ok(sum)
}

/// Returns `n` when `nu = n + ½` for a non-negative integer `n`.
pub fn half_integer_index(nu: f64) -> Option<u32> {
    let n = nu - 0.5;
    (n >= 0.0 && n == n.round() && n < u32::MAX as f64).then_some(n as u32)
}
