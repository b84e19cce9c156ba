use std::path::PathBuf;

use casimir_core::{MethodChoice, Statistics};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Casimir energies and forces between parallel plates (natural units,
/// ħ = c = 1).
#[derive(Debug, Parser)]
#[command(name = "casimir", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Force per unit plate area (negative = attractive)
    Force(EvalArgs),
    /// Vacuum energy per unit plate area
    Energy(EvalArgs),
    /// Fermionic-to-bosonic massless force ratio 1 − 2^(−d)
    Ratio(RatioArgs),
    /// Evaluate energy and force over a one-parameter grid
    Sweep(SweepArgs),
    /// Run the oracle cross-checks
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StatisticsArg {
    Fermionic,
    Bosonic,
}

impl From<StatisticsArg> for Statistics {
    fn from(s: StatisticsArg) -> Self {
        match s {
            StatisticsArg::Fermionic => Statistics::Fermionic,
            StatisticsArg::Bosonic => Statistics::Bosonic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum MethodArg {
    #[default]
    Auto,
    Exact,
    Asymptotic,
}

impl From<MethodArg> for MethodChoice {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => MethodChoice::Auto,
            MethodArg::Exact => MethodChoice::Exact,
            MethodArg::Asymptotic => MethodChoice::Asymptotic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepParameter {
    Separation,
    Mass,
    /// Vary m at fixed separation
    MaProduct,
    Dimension,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Scale {
    #[default]
    Linear,
    Log,
}

/// Series and quadrature caps; unset values fall back to the config file,
/// then to the library defaults.
#[derive(Debug, Clone, Default, Args)]
pub struct NumericsArgs {
    /// TOML file with tolerance keys named like the long flags
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Relative tolerance of the Bessel and zeta series
    #[arg(long)]
    pub series_rel_tol: Option<f64>,

    /// Term cap of the Bessel and zeta series
    #[arg(long)]
    pub max_terms: Option<usize>,

    /// Relative tolerance of the K_ν quadrature
    #[arg(long)]
    pub quad_rel_tol: Option<f64>,

    /// Absolute tolerance of the K_ν quadrature
    #[arg(long)]
    pub quad_abs_tol: Option<f64>,

    /// Maximum step-halving levels of the K_ν quadrature
    #[arg(long)]
    pub max_levels: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct FieldArgs {
    #[arg(long, value_enum, default_value_t = StatisticsArg::Fermionic)]
    pub statistics: StatisticsArg,

    /// Field mass m ≥ 0
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub mass: f64,

    /// Plate separation a > 0
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub separation: f64,

    /// Spatial dimension d ≥ 1
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    pub dimension: u32,

    #[arg(long, value_enum, default_value_t)]
    pub method: MethodArg,

    /// Degrees of freedom (default 4 fermionic, 1 bosonic)
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub dof: Option<u32>,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub field: FieldArgs,

    /// Report per-degree-of-freedom values (default)
    #[arg(long, overrides_with = "total")]
    pub per_dof: bool,

    /// Report values summed over all degrees of freedom
    #[arg(long, overrides_with = "per_dof")]
    pub total: bool,

    #[arg(long, value_enum, default_value_t)]
    pub format: Format,

    #[command(flatten)]
    pub numerics: NumericsArgs,
}

impl EvalArgs {
    pub fn per_dof(&self) -> bool {
        !self.total
    }
}

#[derive(Debug, Clone, Args)]
pub struct RatioArgs {
    /// Spatial dimension d ≥ 1
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub dimension: u32,

    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Swept parameter
    #[arg(long, value_enum)]
    pub parameter: SweepParameter,

    #[arg(long, allow_negative_numbers = true)]
    pub from: f64,

    #[arg(long, allow_negative_numbers = true)]
    pub to: f64,

    /// Grid points, including both ends
    #[arg(long, default_value_t = 11)]
    pub points: usize,

    #[arg(long, value_enum, default_value_t)]
    pub scale: Scale,

    #[command(flatten)]
    pub field: FieldArgs,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    #[command(flatten)]
    pub numerics: NumericsArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Comma-separated check names (energy_quadrature, bessel, theta,
    /// eta_zeta, finite_difference); default all
    #[arg(long, value_delimiter = ',')]
    pub filter: Vec<String>,

    /// Multiplies every check tolerance
    #[arg(long, default_value_t = 1.0)]
    pub tolerance_scale: f64,

    #[arg(long, value_enum, default_value_t)]
    pub format: Format,

    #[command(flatten)]
    pub numerics: NumericsArgs,
}
