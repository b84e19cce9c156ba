//! Casimir vacuum energies and forces between parallel plates in `d`
//! spatial dimensions, for massive and massless fermionic fields under bag
//! boundary conditions, with massless and asymptotic massive bosonic
//! comparators.
//!
//! - [`specfun`]: gamma, zeta/eta, `K_ν` and theta functions;
//! - [`casimir`]: the physical closed forms and series;
//! - [`oracle`]: independent second routes for every analytic step.

pub mod casimir;
pub mod error;
pub mod oracle;
pub mod specfun;

pub use casimir::{
    bosonic_massive_force_asymptotic, bosonic_massless_energy, bosonic_massless_force, energy,
    fermionic_massive_energy, fermionic_massive_energy_asymptotic, fermionic_massive_force,
    fermionic_massive_force_asymptotic, fermionic_massless_energy, fermionic_massless_force, force,
    massless_ratio, mode_wavenumber, EnergyResult, FieldSpec, ForceResult, Geometry, Method,
    MethodChoice, Statistics,
};
pub use error::{Error, Result};
pub use oracle::{CheckKind, OracleConfig, OracleReport};
pub use specfun::{Numerics, QuadratureControl, SeriesControl};
