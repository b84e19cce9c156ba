//! Special functions used by the Casimir formulas: gamma, Riemann zeta and
//! Dirichlet eta, the modified Bessel function `K_ν`, and the Jacobi theta
//! functions `ν₂`, `ν₄`.
//!
//! Every function is pure; tolerances come in through [`SeriesControl`] and
//! [`QuadratureControl`].

mod bessel;
mod control;
mod gamma;
pub mod quad;
mod theta;
mod zeta;

pub use bessel::{
    bessel_k, bessel_k_half_integer, bessel_k_half_integer_scaled, bessel_k_scaled,
    half_integer_index, ln_bessel_k, ln_bessel_k_half_integer,
};
pub use control::{Numerics, QuadratureControl, SeriesControl};
pub use gamma::gamma;
pub use theta::{
    theta2, theta2_direct, theta4, theta4_direct, THETA2_MODULAR_BELOW, THETA4_MODULAR_BELOW,
};
pub use zeta::{dirichlet_eta, eta_series, zeta, zeta_series};

/// A truncated series with its error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub value: f64,
    pub error_estimate: f64,
    pub terms: usize,
}
