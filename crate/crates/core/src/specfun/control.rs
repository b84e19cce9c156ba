use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerances for the quadrature engine.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureControl {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_levels: usize,
}

impl QuadratureControl {
    pub fn new(rel_tol: f64, abs_tol: f64, max_levels: usize) -> Result<Self> {
        let ctl = Self {
            rel_tol,
            abs_tol,
            max_levels,
        };
        ctl.validate()?;
        Ok(ctl)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::invalid("quadrature rel_tol", "> 0", self.rel_tol));
        }
        if !(self.abs_tol >= 0.0) {
            return Err(Error::invalid("quadrature abs_tol", ">= 0", self.abs_tol));
        }
        if self.max_levels < 1 {
            return Err(Error::invalid("max_levels", ">= 1", self.max_levels as f64));
        }
        Ok(())
    }
}

impl Default for QuadratureControl {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 0.0,
            max_levels: 20,
        }
    }
}

/// Truncation control for infinite series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesControl {
    pub rel_tol: f64,
    pub max_terms: usize,
}

impl SeriesControl {
    pub fn new(rel_tol: f64, max_terms: usize) -> Result<Self> {
        let ctl = Self { rel_tol, max_terms };
        ctl.validate()?;
        Ok(ctl)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::invalid("series rel_tol", "> 0", self.rel_tol));
        }
        if self.max_terms < 1 {
            return Err(Error::invalid("max_terms", ">= 1", self.max_terms as f64));
        }
        Ok(())
    }
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            max_terms: 10_000,
        }
    }
}

/// Both controls, as carried through every convergent evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Numerics {
    pub series: SeriesControl,
    pub quadrature: QuadratureControl,
}

impl Numerics {
    pub fn validate(&self) -> Result<()> {
        self.series.validate()?;
        self.quadrature.validate()
    }

    /// Tighter controls, used when values are differenced.
    pub fn tight() -> Self {
        Self {
            series: SeriesControl {
                rel_tol: 1e-14,
                max_terms: 100_000,
            },
            quadrature: QuadratureControl {
                rel_tol: 1e-13,
                abs_tol: 0.0,
                max_levels: 20,
            },
        }
    }
}
