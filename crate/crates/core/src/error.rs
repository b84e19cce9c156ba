use thiserror::Error;

use crate::casimir::Statistics;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid {name}: expected {requirement}, got {value}")]
    InvalidArgument {
        name: &'static str,
        requirement: &'static str,
        value: f64,
    },

    #[error("gamma function has a pole at x = {0}")]
    Pole(f64),

    #[error("{what} did not converge within {limit} {unit} (last estimate {estimate:e}, error {error:e}); raise the cap or loosen the tolerance")]
    Convergence {
        what: &'static str,
        limit: usize,
        unit: &'static str,
        estimate: f64,
        error: f64,
    },

    #[error("mass is zero: use the massless closed-form operation instead")]
    MasslessField,

    #[error("mass is {0}: massless closed forms require a zero-mass field")]
    MassiveField(f64),

    #[error("operation requires a {expected} field, got {found}")]
    WrongStatistics {
        expected: Statistics,
        found: Statistics,
    },

    #[error("{0}")]
    Unsupported(&'static str),
}

impl Error {
    pub(crate) fn invalid(name: &'static str, requirement: &'static str, value: f64) -> Self {
        Error::InvalidArgument {
            name,
            requirement,
            value,
        }
    }

    /// True for failures of a numerical evaluation (as opposed to bad input).
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::Convergence { .. })
    }
}
