//! One-parameter grids evaluated in parallel, emitted in grid order.

use std::env;

use casimir_core::{energy, force, Error, FieldSpec, Geometry, MethodChoice, Numerics, Statistics};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{Scale, SweepArgs, SweepParameter};
use crate::output::OutputRecord;
use crate::CliError;

/// Environment variable selecting the sweep thread count (0 = automatic).
pub const THREADS_VAR: &str = "CASIMIR_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepSpec {
    pub parameter: &'static str,
    pub from: f64,
    pub to: f64,
    pub points: usize,
    pub scale: &'static str,
    pub statistics: Statistics,
    pub mass: f64,
    pub separation: f64,
    pub dimension: u32,
    pub method: &'static str,
    pub dof: u32,
    #[serde(skip)]
    kind: SweepParameter,
    #[serde(skip)]
    log: bool,
    #[serde(skip)]
    choice: MethodChoice,
}

impl SweepSpec {
    pub fn from_args(args: &SweepArgs) -> Result<Self, CliError> {
        let field = &args.field;
        let statistics: Statistics = field.statistics.into();
        let (from, to, points) = (args.from, args.to, args.points);
        if !(from.is_finite() && to.is_finite() && from < to) {
            return Err(CliError::usage(format!(
                "sweep range must satisfy from < to (got {from} to {to})"
            )));
        }
        if points < 2 {
            return Err(CliError::usage("sweep needs at least 2 points"));
        }
        let log = args.scale == Scale::Log;
        if log && from <= 0.0 {
            return Err(CliError::usage("log scale requires from > 0"));
        }
        let spec = Self {
            parameter: match args.parameter {
                SweepParameter::Separation => "separation",
                SweepParameter::Mass => "mass",
                SweepParameter::MaProduct => "ma-product",
                SweepParameter::Dimension => "dimension",
            },
            from,
            to,
            points,
            scale: if log { "log" } else { "linear" },
            statistics,
            mass: field.mass,
            separation: field.separation,
            dimension: field.dimension,
            method: match field.method {
                crate::args::MethodArg::Auto => "auto",
                crate::args::MethodArg::Exact => "exact",
                crate::args::MethodArg::Asymptotic => "asymptotic",
            },
            dof: field.dof.unwrap_or(FieldSpec::default_dof(statistics)),
            kind: args.parameter,
            log,
            choice: field.method.into(),
        };
        spec.points_dma()?;
        Ok(spec)
    }

    fn grid(&self) -> Vec<f64> {
        let n = self.points;
        (0..n)
            .map(|i| {
                if i == 0 {
                    return self.from;
                }
                if i == n - 1 {
                    return self.to;
                }
                let t = i as f64 / (n - 1) as f64;
                if self.log {
                    (self.from.ln() + t * (self.to.ln() - self.from.ln())).exp()
                } else {
                    self.from + t * (self.to - self.from)
                }
            })
            .collect()
    }

    /// `(d, m, a)` for every grid point, in grid order.
    pub fn points_dma(&self) -> Result<Vec<(f64, f64, f64)>, CliError> {
        let d0 = f64::from(self.dimension);
        self.grid()
            .into_iter()
            .map(|x| match self.kind {
                SweepParameter::Separation => Ok((d0, self.mass, x)),
                SweepParameter::Mass => Ok((d0, x, self.separation)),
                SweepParameter::MaProduct => Ok((d0, x / self.separation, self.separation)),
                SweepParameter::Dimension => {
                    let d = x.round();
                    if (x - d).abs() > 1e-9 || d < 1.0 {
                        Err(CliError::usage(format!(
                            "dimension sweep produced non-integral or sub-unit d = {x}; \
                             choose from, to and points so every grid value is an integer ≥ 1"
                        )))
                    } else {
                        Ok((d, self.mass, self.separation))
                    }
                }
            })
            .collect()
    }

    fn evaluate(&self, d: f64, m: f64, a: f64, numerics: &Numerics) -> Result<OutputRecord, Error> {
        let geometry = Geometry::new(a, d)?;
        let field = FieldSpec::new(self.statistics, m, self.dof)?;
        let f = force(&geometry, &field, true, self.choice, numerics)?;
        let e = match energy(&geometry, &field, true, self.choice, numerics) {
            Ok(e) => Some(e.value),
            Err(Error::Unsupported(_)) if self.statistics == Statistics::Bosonic => None,
            Err(e) => return Err(e),
        };
        Ok(OutputRecord {
            d,
            m,
            a,
            ma: m * a,
            energy_per_dof: e,
            force_per_dof: Some(f.value),
            force_total: Some(f.value * f64::from(self.dof)),
            method: f.method.to_string(),
            error_estimate: Some(f.error_estimate),
        })
    }
}

pub struct SweepOutcome {
    pub rows: Vec<OutputRecord>,
    /// Messages for rows whose evaluation did not converge.
    pub failures: Vec<String>,
}

fn thread_count() -> Result<usize, CliError> {
    match env::var(THREADS_VAR) {
        Err(env::VarError::NotPresent) => Ok(0),
        Err(e) => Err(CliError::usage(format!("{THREADS_VAR}: {e}"))),
        Ok(s) => s.trim().parse().map_err(|_| {
            CliError::usage(format!(
                "{THREADS_VAR} must be a non-negative integer, got '{s}'"
            ))
        }),
    }
}

/// Evaluates every grid point. Non-convergence marks a row as failed;
/// any other error aborts the sweep as a usage error.
pub fn run(spec: &SweepSpec, numerics: &Numerics) -> Result<SweepOutcome, CliError> {
    let points = spec.points_dma()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count()?)
        .build()
        .map_err(|e| CliError::usage(format!("cannot start thread pool: {e}")))?;
    let results: Vec<_> = pool.install(|| {
        points
            .par_iter()
            .map(|&(d, m, a)| spec.evaluate(d, m, a, numerics))
            .collect()
    });

    let mut rows = Vec::with_capacity(results.len());
    let mut failures = Vec::new();
    for (&(d, m, a), result) in points.iter().zip(results) {
        match result {
            Ok(row) => rows.push(row),
            Err(e) if e.is_numerical() => {
                failures.push(format!("d = {d}, m = {m}, a = {a}: {e}"));
                rows.push(OutputRecord::failed(d, m, a));
            }
            Err(e) => {
                return Err(CliError::usage(format!("d = {d}, m = {m}, a = {a}: {e}")));
            }
        }
    }
    Ok(SweepOutcome { rows, failures })
}
