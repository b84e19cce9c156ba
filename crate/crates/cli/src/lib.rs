//! Front end for `casimir-core`: single evaluations, parameter sweeps and
//! oracle verification runs.
//!
//! Exit codes: 0 success, 1 usage error, 2 numerical failure.

pub mod args;
pub mod config;
pub mod output;
pub mod sweep;

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};

use casimir_core::{
    energy, force, massless_ratio, oracle, CheckKind, FieldSpec, Geometry, MethodChoice,
    OracleConfig, Statistics,
};
use clap::Parser;
use serde::Serialize;

use args::{Cli, Command, EvalArgs, FieldArgs, Format, RatioArgs, SweepArgs, VerifyArgs};
use output::{Evaluation, OutputRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NUMERICAL: i32 = 2;

const BOSONIC_CAVEAT: &str = "note: massive bosonic fields are evaluated with the large-ma \
                              asymptotic force only; no exact series or energy is available";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numerical(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Numerical(_) => EXIT_NUMERICAL,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Numerical(m) => f.write_str(m),
        }
    }
}

impl From<casimir_core::Error> for CliError {
    fn from(e: casimir_core::Error) -> Self {
        if e.is_numerical() {
            CliError::Numerical(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Usage(format!("write failed: {e}"))
    }
}

/// Parses `argv`, runs the command against `out` and returns the exit code.
/// Diagnostics go to stderr.
pub fn run<I, T>(argv: I, out: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match &cli.command {
        Command::Force(a) => cmd_eval(a, Quantity::Force, out),
        Command::Energy(a) => cmd_eval(a, Quantity::Energy, out),
        Command::Ratio(a) => cmd_ratio(a, out),
        Command::Sweep(a) => cmd_sweep(a, out),
        Command::Verify(a) => cmd_verify(a, out),
    };
    let _ = out.flush();
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Quantity {
    Force,
    Energy,
}

fn field_spec(args: &FieldArgs) -> Result<(Geometry, FieldSpec), CliError> {
    let statistics: Statistics = args.statistics.into();
    let dof = args.dof.unwrap_or(FieldSpec::default_dof(statistics));
    let geometry = Geometry::new(args.separation, f64::from(args.dimension))?;
    let field = FieldSpec::new(statistics, args.mass, dof)?;
    Ok((geometry, field))
}

fn bosonic_massive(field: &FieldSpec) -> bool {
    field.statistics() == Statistics::Bosonic && !field.is_massless()
}

#[derive(Serialize)]
struct EvalParameters {
    statistics: Statistics,
    mass: f64,
    separation: f64,
    dimension: u32,
    method: MethodArgName,
    dof: u32,
    per_dof: bool,
}

#[derive(Serialize)]
#[serde(transparent)]
struct MethodArgName(&'static str);

fn method_name(choice: MethodChoice) -> MethodArgName {
    MethodArgName(match choice {
        MethodChoice::Auto => "auto",
        MethodChoice::Exact => "exact",
        MethodChoice::Asymptotic => "asymptotic",
    })
}

fn cmd_eval(args: &EvalArgs, quantity: Quantity, out: &mut impl Write) -> Result<i32, CliError> {
    let numerics = config::resolve(&args.numerics)?;
    let (geometry, field) = field_spec(&args.field)?;
    let choice: MethodChoice = args.field.method.into();
    let per_dof = args.per_dof();
    let (value, method, error_estimate, terms_used) = match quantity {
        Quantity::Force => {
            let r = force(&geometry, &field, per_dof, choice, &numerics)?;
            (r.value, r.method, r.error_estimate, r.terms_used)
        }
        Quantity::Energy => {
            let r = energy(&geometry, &field, per_dof, choice, &numerics)?;
            (r.value, r.method, r.error_estimate, r.terms_used)
        }
    };
    if bosonic_massive(&field) {
        eprintln!("{BOSONIC_CAVEAT}");
    }
    let record = Evaluation {
        quantity: match quantity {
            Quantity::Force => "force",
            Quantity::Energy => "energy",
        }
        .to_string(),
        statistics: field.statistics().to_string(),
        d: geometry.dimension(),
        m: field.mass(),
        a: geometry.separation(),
        ma: field.mass() * geometry.separation(),
        dof: field.dof(),
        per_dof,
        value,
        method: method.to_string(),
        error_estimate,
        terms_used,
    };
    match args.format {
        Format::Text => out.write_all(record.text().as_bytes())?,
        Format::Csv => {
            writeln!(out, "{}", output::EVALUATION_CSV_HEADER)?;
            writeln!(out, "{}", record.csv_line())?;
        }
        Format::Json => {
            let parameters = EvalParameters {
                statistics: field.statistics(),
                mass: field.mass(),
                separation: geometry.separation(),
                dimension: args.field.dimension,
                method: method_name(choice),
                dof: field.dof(),
                per_dof,
            };
            output::write_json(out, &parameters, &numerics, &[record])?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct RatioRow {
    d: u32,
    ratio: f64,
}

fn cmd_ratio(args: &RatioArgs, out: &mut impl Write) -> Result<i32, CliError> {
    let ratio = massless_ratio(f64::from(args.dimension))?;
    match args.format {
        Format::Text => writeln!(out, "{ratio}")?,
        Format::Csv => {
            writeln!(out, "d,ratio")?;
            writeln!(out, "{},{ratio:e}", args.dimension)?;
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Params {
                dimension: u32,
            }
            let row = RatioRow {
                d: args.dimension,
                ratio,
            };
            output::write_json(
                out,
                &Params {
                    dimension: args.dimension,
                },
                &Default::default(),
                &[row],
            )?;
        }
    }
    Ok(EXIT_OK)
}

fn write_sweep_text(out: &mut impl Write, rows: &[OutputRecord]) -> io::Result<()> {
    let cols = output::CSV_HEADER.split(',');
    let header: Vec<String> = cols.map(|c| format!("{c:>24}")).collect();
    writeln!(out, "{}", header.join(""))?;
    for row in rows {
        let cells: Vec<String> = row
            .csv_line()
            .split(',')
            .map(|c| format!("{:>24}", if c.is_empty() { "-" } else { c }))
            .collect();
        writeln!(out, "{}", cells.join(""))?;
    }
    Ok(())
}

fn cmd_sweep(args: &SweepArgs, out: &mut impl Write) -> Result<i32, CliError> {
    let numerics = config::resolve(&args.numerics)?;
    let spec = sweep::SweepSpec::from_args(args)?;
    let outcome = sweep::run(&spec, &numerics)?;
    if spec.statistics == Statistics::Bosonic
        && outcome.rows.iter().any(|r| r.m > 0.0 && !r.is_failed())
    {
        eprintln!("{BOSONIC_CAVEAT}");
    }
    match args.format {
        Format::Csv => {
            writeln!(out, "{}", output::CSV_HEADER)?;
            for row in &outcome.rows {
                writeln!(out, "{}", row.csv_line())?;
            }
        }
        Format::Json => output::write_json(out, &spec, &numerics, &outcome.rows)?,
        Format::Text => write_sweep_text(out, &outcome.rows)?,
    }
    if outcome.failures.is_empty() {
        Ok(EXIT_OK)
    } else {
        for f in &outcome.failures {
            eprintln!("error: {f}");
        }
        Ok(EXIT_NUMERICAL)
    }
}

#[derive(Serialize)]
struct VerifyParameters {
    checks: Vec<CheckKind>,
    tolerance_scale: f64,
}

fn cmd_verify(args: &VerifyArgs, out: &mut impl Write) -> Result<i32, CliError> {
    let numerics = config::resolve(&args.numerics)?;
    let checks: Vec<CheckKind> = if args.filter.is_empty() {
        CheckKind::ALL.to_vec()
    } else {
        args.filter
            .iter()
            .map(|s| s.trim().parse())
            .collect::<Result<_, String>>()
            .map_err(CliError::Usage)?
    };
    let scale = args.tolerance_scale;
    if !(scale.is_finite() && scale > 0.0) {
        return Err(CliError::usage(format!(
            "tolerance scale must be positive and finite, got {scale}"
        )));
    }
    let config = OracleConfig {
        numerics,
        tolerance_scale: scale,
    };
    let reports = oracle::run_all(&checks, &config);
    let passed = reports.iter().filter(|r| r.passed).count();
    match args.format {
        Format::Text => {
            for r in &reports {
                let status = if r.passed { "PASS" } else { "FAIL" };
                write!(
                    out,
                    "{status}  {:<52} residual {:<12.3e} tolerance {:.3e}",
                    r.name, r.relative_residual, r.tolerance
                )?;
                match &r.error {
                    Some(e) => writeln!(out, "  ({e})")?,
                    None => writeln!(out)?,
                }
            }
            writeln!(out, "{passed}/{} checks passed", reports.len())?;
        }
        Format::Csv => {
            writeln!(
                out,
                "name,reference_value,oracle_value,relative_residual,tolerance,passed"
            )?;
            for r in &reports {
                writeln!(
                    out,
                    "\"{}\",{:e},{:e},{:e},{:e},{}",
                    r.name,
                    r.reference_value,
                    r.oracle_value,
                    r.relative_residual,
                    r.tolerance,
                    r.passed
                )?;
            }
        }
        Format::Json => {
            let parameters = VerifyParameters {
                checks,
                tolerance_scale: scale,
            };
            output::write_json(out, &parameters, &config.numerics, &reports)?;
        }
    }
    Ok(if passed == reports.len() {
        EXIT_OK
    } else {
        EXIT_NUMERICAL
    })
}
