use thiserror::Error;

use crate::linalg::EigPair;

/// Errors produced by the detectors, generators and estimators in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// Power iteration ran out of iterations. Carries the best iterate so the
    /// caller can decide whether to fall back to the dense solver.
    #[error("power iteration did not converge in {iterations} iterations (residual {residual:e})")]
    NoConvergence {
        iterations: usize,
        residual: f64,
        best: EigPair,
    },

    #[error("detector already stopped at t = {0}")]
    AlreadyStopped(usize),

    #[error("window too small: need w > {min_exclusive} for the drift bounds to be ordered, got w = {window}")]
    WindowTooSmall { window: usize, min_exclusive: f64 },

    #[error("approximation out of range: {0}")]
    OutOfRange(String),

    #[error("threshold too high for trial budget: no upper exits in {0} SPRT cycles")]
    NoUpperExits(usize),

    #[error("could not bracket the target ARL {target} within {expansions} expansions")]
    BracketNotFound { target: f64, expansions: usize },

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, actual: usize) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, actual })
    }
}
