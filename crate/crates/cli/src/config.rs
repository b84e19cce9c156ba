//! Tolerance resolution: flags override the config file, which overrides
//! the library defaults.

use std::fs;
use std::path::Path;

use casimir_core::Numerics;
use serde::Deserialize;

use crate::args::NumericsArgs;
use crate::CliError;

/// Contents of a `--config` file. Keys mirror the long flag names.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct ConfigFile {
    pub series_rel_tol: Option<f64>,
    pub max_terms: Option<usize>,
    pub quad_rel_tol: Option<f64>,
    pub quad_abs_tol: Option<f64>,
    pub max_levels: Option<usize>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
        toml::from_str(&text)
            .map_err(|e| CliError::usage(format!("invalid config {}: {e}", path.display())))
    }
}

pub fn resolve(args: &NumericsArgs) -> Result<Numerics, CliError> {
    let file = match &args.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let mut numerics = Numerics::default();
    let series = &mut numerics.series;
    let quad = &mut numerics.quadrature;
    if let Some(v) = args.series_rel_tol.or(file.series_rel_tol) {
        series.rel_tol = v;
    }
    if let Some(v) = args.max_terms.or(file.max_terms) {
        series.max_terms = v;
    }
    if let Some(v) = args.quad_rel_tol.or(file.quad_rel_tol) {
        quad.rel_tol = v;
    }
    if let Some(v) = args.quad_abs_tol.or(file.quad_abs_tol) {
        quad.abs_tol = v;
    }
    if let Some(v) = args.max_levels.or(file.max_levels) {
        quad.max_levels = v;
    }
    numerics.validate()?;
    Ok(numerics)
}
