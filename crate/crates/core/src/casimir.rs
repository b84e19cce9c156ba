//! Casimir energies and forces between two parallel plates separated by `a`
//! in `d` spatial dimensions.
//!
//! Values are per unit `(d−1)`-dimensional plate hyperarea in natural units
//! (`ħ = c = 1`): energies carry dimension `mass^d`, forces `mass^(d+1)`.
//! A negative force is attractive. Every operation reports per degree of
//! freedom when `per_dof` is set and multiplies by [`FieldSpec::dof`]
//! otherwise.
//!
//! The massive fermionic energy under MIT bag conditions is, per degree of
//! freedom,
//!
//! ```text
//! E(a) = (a / 2^d) (m²/π)^ν Σ_{n≥1} (−1)ⁿ K_ν(2anm) / (anm)^ν,   ν = (d+1)/2
//! ```
//!
//! with the force `F = −∂E/∂a` obtained by differentiating each term
//! analytically. For `m → 0` this collapses onto the closed form
//! `E = −a Γ(ν) (1 − 2^(−d)) ζ(d+1) / (4πa²)^ν`.

use std::f64::consts::{LN_2, PI};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::{
    bessel_k_half_integer_scaled, bessel_k_scaled, gamma, half_integer_index, ln_bessel_k,
    ln_bessel_k_half_integer, zeta_series, Numerics, QuadratureControl, SeriesControl,
};

const ZETA_CONTROL: SeriesControl = SeriesControl {
    rel_tol: 1e-15,
    max_terms: 2_000,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistics {
    Fermionic,
    Bosonic,
}

impl fmt::Display for Statistics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Statistics::Fermionic => "fermionic",
            Statistics::Bosonic => "bosonic",
        })
    }
}

/// Plate separation `a > 0` and spatial dimension `d ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geometry {
    separation: f64,
    dimension: f64,
}

impl Geometry {
    pub fn new(separation: f64, dimension: f64) -> Result<Self> {
        if !(separation > 0.0) || !separation.is_finite() {
            return Err(Error::invalid("separation", "finite and > 0", separation));
        }
        if !(dimension >= 1.0) || !dimension.is_finite() {
            return Err(Error::invalid("dimension", "finite and >= 1", dimension));
        }
        Ok(Self {
            separation,
            dimension,
        })
    }

    pub fn separation(&self) -> f64 {
        self.separation
    }

    pub fn dimension(&self) -> f64 {
        self.dimension
    }

    pub fn with_separation(&self, separation: f64) -> Result<Self> {
        Self::new(separation, self.dimension)
    }

    /// Bessel order `ν = (d+1)/2` appearing throughout.
    fn order(&self) -> f64 {
        0.5 * (self.dimension + 1.0)
    }
}

/// Field statistics, mass and degree-of-freedom count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSpec {
    statistics: Statistics,
    mass: f64,
    dof: u32,
}

impl FieldSpec {
    pub const FERMIONIC_DOF: u32 = 4;
    pub const BOSONIC_DOF: u32 = 1;

    pub fn new(statistics: Statistics, mass: f64, dof: u32) -> Result<Self> {
        if !(mass >= 0.0) || !mass.is_finite() {
            return Err(Error::invalid("mass", "finite and >= 0", mass));
        }
        if dof < 1 {
            return Err(Error::invalid("dof", ">= 1", dof as f64));
        }
        Ok(Self {
            statistics,
            mass,
            dof,
        })
    }

    /// A Dirac field with the default four degrees of freedom.
    pub fn fermionic(mass: f64) -> Result<Self> {
        Self::new(Statistics::Fermionic, mass, Self::FERMIONIC_DOF)
    }

    pub fn bosonic(mass: f64) -> Result<Self> {
        Self::new(Statistics::Bosonic, mass, Self::BOSONIC_DOF)
    }

    pub fn default_dof(statistics: Statistics) -> u32 {
        match statistics {
            Statistics::Fermionic => Self::FERMIONIC_DOF,
            Statistics::Bosonic => Self::BOSONIC_DOF,
        }
    }

    pub fn statistics(&self) -> Statistics {
        self.statistics
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn dof(&self) -> u32 {
        self.dof
    }

    pub fn is_massless(&self) -> bool {
        self.mass == 0.0
    }

    fn multiplicity(&self, per_dof: bool) -> f64 {
        if per_dof {
            1.0
        } else {
            self.dof as f64
        }
    }

    fn expect(&self, statistics: Statistics) -> Result<()> {
        if self.statistics != statistics {
            return Err(Error::WrongStatistics {
                expected: statistics,
                found: self.statistics,
            });
        }
        Ok(())
    }

    fn expect_massive(&self) -> Result<()> {
        if self.is_massless() {
            return Err(Error::MasslessField);
        }
        Ok(())
    }

    fn expect_massless(&self) -> Result<()> {
        if !self.is_massless() {
            return Err(Error::MassiveField(self.mass));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExactSeries,
    Asymptotic,
    MasslessClosedForm,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ExactSeries => "exact-series",
            Method::Asymptotic => "asymptotic",
            Method::MasslessClosedForm => "massless-closed-form",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyResult {
    pub value: f64,
    pub per_dof: bool,
    pub method: Method,
    pub error_estimate: f64,
    pub terms_used: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ForceResult {
    pub value: f64,
    pub per_dof: bool,
    pub method: Method,
    pub error_estimate: f64,
    pub terms_used: usize,
}

/// `k_n = (2n−1)π / 2a`, the n-th normal wavenumber under bag boundary
/// conditions (`n = 1, 2, 3, …` covers the odd multiples of `π/2a`).
pub fn mode_wavenumber(n: u32, geometry: &Geometry) -> Result<f64> {
    if n < 1 {
        return Err(Error::invalid("mode index", ">= 1", n as f64));
    }
    Ok((2 * n - 1) as f64 * PI / (2.0 * geometry.separation))
}

/// `1 − 2^(−d)`, the massless fermion-to-boson force ratio.
pub fn massless_ratio(dimension: f64) -> Result<f64> {
    if !(dimension >= 1.0) || !dimension.is_finite() {
        return Err(Error::invalid("dimension", "finite and >= 1", dimension));
    }
    Ok(1.0 - (-dimension).exp2())
}

// ---------------------------------------------------------------------------
// Massive fermionic field: exact Bessel series

/// Bessel evaluations at one order, using the closed form when it exists.
struct BesselK<'a> {
    quad: &'a QuadratureControl,
}

impl BesselK<'_> {
    fn scaled(&self, nu: f64, z: f64) -> Result<f64> {
        match half_integer_index(nu) {
            Some(n) => bessel_k_half_integer_scaled(n, z),
            None => bessel_k_scaled(nu, z, self.quad),
        }
    }

    fn ln(&self, nu: f64, z: f64) -> Result<f64> {
        match half_integer_index(nu) {
            Some(n) => ln_bessel_k_half_integer(n, z),
            None => ln_bessel_k(nu, z, self.quad),
        }
    }
}

/// Log of `(a/2^d) (m²/π)^ν`, the prefactor shared by energy and force.
fn ln_series_prefactor(geometry: &Geometry, mass: f64) -> f64 {
    let d = geometry.dimension;
    geometry.separation.ln() - d * LN_2 + geometry.order() * (2.0 * mass.ln() - PI.ln())
}

struct AlternatingSum {
    value: f64,
    first_omitted: f64,
    terms: usize,
}

/// Sums `Σ (−1)ⁿ |t_n|` from `ln |t_n|`, stopping once the next magnitude is
/// below `rel_tol` times the partial sum. Magnitudes must decrease in `n`.
fn alternating_sum<F>(ln_term: F, ctl: &SeriesControl, what: &'static str) -> Result<AlternatingSum>
where
    F: Fn(usize) -> Result<f64>,
{
    ctl.validate()?;
    let mut sum = 0.0;
    let mut next = ln_term(1)?.exp();
    for n in 1..=ctl.max_terms {
        let sign = if n % 2 == 1 { -1.0 } else { 1.0 };
        sum += sign * next;
        next = ln_term(n + 1)?.exp();
        if next <= ctl.rel_tol * sum.abs() {
            return Ok(AlternatingSum {
                value: sum,
                first_omitted: next,
                terms: n,
            });
        }
    }
    Err(Error::Convergence {
        what,
        limit: ctl.max_terms,
        unit: "terms",
        estimate: sum,
        error: next,
    })
}

/// Renormalized vacuum energy of a massive fermionic field from the Bessel
/// series. The error estimate is the first omitted term (alternating-series
/// bound).
pub fn fermionic_massive_energy(
    geometry: &Geometry,
    field: &FieldSpec,
    per_dof: bool,
    numerics: &Numerics,
) -> Result<EnergyResult> {
    field.expect(Statistics::Fermionic)?;
    field.expect_massive()?;
    numerics.validate()?;

    let a = geometry.separation;
    let m = field.mass;
    let nu = geometry.order();
    let bessel = BesselK {
        quad: &numerics.quadrature,
    };
    let ln_prefactor = ln_series_prefactor(geometry, m);

    let sum = alternating_sum(
        |n| {
            let c = a * n as f64 * m;
            Ok(ln_prefactor + bessel.ln(nu, 2.0 * c)? - nu * c.ln())
        },
        &numerics.series,
        "massive fermionic energy series",
    )?;

    let scale = field.multiplicity(per_dof);
    Ok(EnergyResult {
        value: scale * sum.value,
        per_dof,
        method: Method::ExactSeries,
        error_estimate: scale * sum.first_omitted,
        terms_used: sum.terms,
    })
}

/// `F = −∂E/∂a` for the massive fermionic field, differentiating each
/// series term with `K_ν'(z) = −(K_{ν−1}(z) + K_{ν+1}(z))/2`.
///
/// Per term, `∂/∂a [a K_ν(2anm)/(anm)^ν] = (anm)^(−ν) [(1−ν)K_ν − (z/2)(K_{ν−1}+K_{ν+1})]`
/// with `z = 2anm`; the bracket is negative for `ν ≥ 1`.
pub fn fermionic_massive_force(
    geometry: &Geometry,
    field: &FieldSpec,
    per_dof: bool,
    numerics: &Numerics,
) -> Result<ForceResult> {
    field.expect(Statistics::Fermionic)?;
    field.expect_massive()?;
    numerics.validate()?;

    let a = geometry.separation;
    let m = field.mass;
    let nu = geometry.order();
    let bessel = BesselK {
        quad: &numerics.quadrature,
    };
    // The force prefactor lacks the leading factor a of the energy.
    let ln_prefactor = ln_series_prefactor(geometry, m) - a.ln();

    // The bracket is −|B|, so −C(−1)ⁿ(anm)^(−ν)B = C(−1)ⁿ(anm)^(−ν)|B|.
    let sum = alternating_sum(
        |n| {
            let c = a * n as f64 * m;
            let z = 2.0 * c;
            let lower = bessel.scaled((nu - 1.0).abs(), z)?;
            let middle = bessel.scaled(nu, z)?;
            let upper = bessel.scaled(nu + 1.0, z)?;
            let bracket = (nu - 1.0) * middle + 0.5 * z * (lower + upper);
            Ok(ln_prefactor + bracket.ln() - z - nu * c.ln())
        },
        &numerics.series,
        "massive fermionic force series",
    )?;

    let scale = field.multiplicity(per_dof);
    Ok(ForceResult {
        value: scale * sum.value,
        per_dof,
        method: Method::ExactSeries,
        error_estimate: scale * sum.first_omitted,
        terms_used: sum.terms,
    })
}

// ---------------------------------------------------------------------------
// Massive fields: ma ≫ 1 asymptotics

/// Next-order relative correction `(4ν²−1)/8z` at `z = 2ma`, used as the
/// error estimate of the asymptotic energy.
fn asymptotic_energy_correction(geometry: &Geometry, mass: f64) -> f64 {
    let d = geometry.dimension;
    (d * d + 2.0 * d) / (16.0 * mass * geometry.separation)
}

/// Next-order relative correction of the asymptotic force: the Bessel term
/// above plus `d/(4ma)` from differentiating the `a^(−d/2)` prefactor.
fn asymptotic_force_correction(geometry: &Geometry, mass: f64) -> f64 {
    let d = geometry.dimension;
    (d * d + 6.0 * d) / (16.0 * mass * geometry.separation)
}

/// `−m^(d/2) e^(−2ma) / (2 (4πa)^(d/2))`, the leading `n = 1` term of the
/// energy series with `K_ν(z) ≈ √(π/2z) e^(−z)`.
pub fn fermionic_massive_energy_asymptotic(
    geometry: &Geometry,
    field: &FieldSpec,
    per_dof: bool,
) -> Result<EnergyResult> {
    field.expect(Statistics::Fermionic)?;
    field.expect_massive()?;
    let (a, m, d) = (geometry.separation, field.mass, geometry.dimension);
    let per = -(0.5 * d * m.ln() - 2.0 * m * a - LN_2 - 0.5 * d * (4.0 * PI * a).ln()).exp();
    let scale = field.multiplicity(per_dof);
    Ok(EnergyResult {
        value: scale * per,
        per_dof,
        method: Method::Asymptotic,
        error_estimate: scale * per.abs() * asymptotic_energy_correction(geometry, m),
        terms_used: 1,
    })
}

fn massive_asymptotic_force(geometry: &Geometry, field: &FieldSpec, per_dof: bool) -> ForceResult {
    let (a, m, d) = (geometry.separation, field.mass, geometry.dimension);
    let per = -((0.5 * d + 1.0) * m.ln() - 2.0 * m * a - 0.5 * d * (4.0 * PI * a).ln()).exp();
    let scale = field.multiplicity(per_dof);
    ForceResult {
        value: scale * per,
        per_dof,
        method: Method::Asymptotic,
        error_estimate: scale * per.abs() * asymptotic_force_correction(geometry, m),
        terms_used: 1,
    }
}

/// `F = −m^(d/2+1) e^(−2ma) / (4πa)^(d/2)` per degree of freedom.
pub fn fermionic_massive_force_asymptotic(
    geometry: &Geometry,
    field: &FieldSpec,
    per_dof: bool,
) -> Result<ForceResult> {
    field.expect(Statistics::Fermionic)?;
    field.expect_massive()?;
    Ok(massive_asymptotic_force(geometry, field, per_dof))
}

/// The massive bosonic force for `ma ≫ 1`; per degree of freedom it is the
/// same expression as the fermionic one.
pub fn bosonic_massive_force_asymptotic(
    geometry: &Geometry,
    field: &FieldSpec,
    per_dof: bool,
) -> Result<ForceResult> {
    field.expect(Statistics::Bosonic)?;
    field.expect_massive()?;
    Ok(massive_asymptotic_force(geometry, field, per_dof))
}

// ---------------------------------------------------------------------------
// Massless fields: closed forms

/// `(−a Γ(ν) ζ(d+1) / (4πa²)^ν, relative ζ error)`, the bosonic energy per
/// degree of freedom.
fn massless_bosonic_energy_per_dof(geometry: &Geometry) -> Result<(f64, f64)> {
    let (a, d) = (geometry.separation, geometry.dimension);
    let nu = geometry.order();
    let zeta = zeta_series(d + 1.0, &ZETA_CONTROL)?;
    let value = -a * gamma(nu)? * zeta.value / (4.0 * PI * a * a).powf(nu);
    Ok((value, zeta.error_estimate / zeta.value))
}

fn massless_energy(
    geometry: &Geometry,
    field: &FieldSpec,
    per_dof: bool,
    ratio: f64,
) -> Result<EnergyResult> {
    field.expect_massless()?;
    let (per, rel_err) = massless_bosonic_energy_per_dof(geometry)?;
    let value = field.multiplicity(per_dof) * ratio * per;
    Ok(EnergyResult {
        value,
        per_dof,
        method: Method::MasslessClosedForm,
        error_estimate: (value * rel_err).abs(),
        terms_used: 0,
    })
}

fn massless_force(
    geometry: &Geometry,
    field: &FieldSpec,
    per_dof: bool,
    ratio: f64,
) -> Result<ForceResult> {
    // E ∝ a^(−d), so F = −∂E/∂a = d E / a.
    let energy = massless_energy(geometry, field, per_dof, ratio)?;
    let factor = geometry.dimension / geometry.separation;
    Ok(ForceResult {
        value: factor * energy.value,
        per_dof,
        method: Method::MasslessClosedForm,
        error_estimate: factor * energy.error_estimate,
        terms_used: 0,
    })
}

/// `E = −a Γ(ν) (1 − 2^(−d)) ζ(d+1) / (4πa²)^ν` per degree of freedom.
pub fn fermionic_massless_energy(
    geometry: &Geometry,
    field: &FieldSpec,
    per_dof: bool,
) -> Result<EnergyResult> {
    field.expect(Statistics::Fermionic)?;
    massless_energy(
        geometry,
        field,
        per_dof,
        massless_ratio(geometry.dimension)?,
    )
}

/// `F = −d Γ(ν) (1 − 2^(−d)) ζ(d+1) / (4πa²)^ν` per degree of freedom.
pub fn fermionic_massless_force(
    geometry: &Geometry,
    field: &FieldSpec,
    per_dof: bool,
) -> Result<ForceResult> {
    field.expect(Statistics::Fermionic)?;
    massless_force(
        geometry,
        field,
        per_dof,
        massless_ratio(geometry.dimension)?,
    )
}

/// `E = −a Γ(ν) ζ(d+1) / (4πa²)^ν` per degree of freedom.
pub fn bosonic_massless_energy(
    geometry: &Geometry,
    field: &FieldSpec,
    per_dof: bool,
) -> Result<EnergyResult> {
    field.expect(Statistics::Bosonic)?;
    massless_energy(geometry, field, per_dof, 1.0)
}

/// `F = −d Γ(ν) ζ(d+1) / (4πa²)^ν` per degree of freedom.
pub fn bosonic_massless_force(
    geometry: &Geometry,
    field: &FieldSpec,
    per_dof: bool,
) -> Result<ForceResult> {
    field.expect(Statistics::Bosonic)?;
    massless_force(geometry, field, per_dof, 1.0)
}

// ---------------------------------------------------------------------------
// Dispatch

/// Requested evaluation route.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MethodChoice {
    /// Exact series for massive fermions, closed forms for massless fields,
    /// the asymptotic form for massive bosons.
    #[default]
    Auto,
    Exact,
    Asymptotic,
}

/// Vacuum energy for any supported field, routed by statistics, mass and
/// `choice`.
pub fn energy(
    geometry: &Geometry,
    field: &FieldSpec,
    per_dof: bool,
    choice: MethodChoice,
    numerics: &Numerics,
) -> Result<EnergyResult> {
    match (field.statistics, field.is_massless(), choice) {
        (_, true, MethodChoice::Asymptotic) => Err(Error::Unsupported(
            "the asymptotic form needs mass > 0; massless fields use the closed form",
        )),
        (Statistics::Fermionic, true, _) => fermionic_massless_energy(geometry, field, per_dof),
        (Statistics::Bosonic, true, _) => bosonic_massless_energy(geometry, field, per_dof),
        (Statistics::Fermionic, false, MethodChoice::Asymptotic) => {
            fermionic_massive_energy_asymptotic(geometry, field, per_dof)
        }
        (Statistics::Fermionic, false, _) => {
            fermionic_massive_energy(geometry, field, per_dof, numerics)
        }
        (Statistics::Bosonic, false, _) => Err(Error::Unsupported(
            "massive bosonic energy is out of scope; only the asymptotic force is available",
        )),
    }
}

/// Force for any supported field, routed like [`energy`].
pub fn force(
    geometry: &Geometry,
    field: &FieldSpec,
    per_dof: bool,
    choice: MethodChoice,
    numerics: &Numerics,
) -> Result<ForceResult> {
    match (field.statistics, field.is_massless(), choice) {
        (_, true, MethodChoice::Asymptotic) => Err(Error::Unsupported(
            "the asymptotic form needs mass > 0; massless fields use the closed form",
        )),
        (Statistics::Fermionic, true, _) => fermionic_massless_force(geometry, field, per_dof),
        (Statistics::Bosonic, true, _) => bosonic_massless_force(geometry, field, per_dof),
        (Statistics::Fermionic, false, MethodChoice::Asymptotic) => {
            fermionic_massive_force_asymptotic(geometry, field, per_dof)
        }
        (Statistics::Fermionic, false, _) => {
            fermionic_massive_force(geometry, field, per_dof, numerics)
        }
        (Statistics::Bosonic, false, MethodChoice::Exact) => Err(Error::Unsupported(
            "the exact massive bosonic series is out of scope; use the asymptotic method",
        )),
        (Statistics::Bosonic, false, _) => {
            bosonic_massive_force_asymptotic(geometry, field, per_dof)
        }
    }
}
