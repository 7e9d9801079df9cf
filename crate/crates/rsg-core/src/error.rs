//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by kernel, coefficient and evaluator operations.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation at a pole of the function.
    #[error("pole encountered: {0}")]
    Pole(String),

    /// Quadrature failed to reach the requested tolerance.
    #[error("quadrature did not converge after {refinements} refinements (last change {last_change})")]
    QuadratureNonConvergence { refinements: u32, last_change: String },

    /// Index outside the range admitted by the defining formula.
    #[error("index out of range: {0}")]
    Index(String),

    /// Closed-form evaluation too close to a removable singularity;
    /// the caller should fall back to quadrature.
    #[error("near removable singularity: |sin| = {0}")]
    NearSingularity(String),

    /// Invalid combination of construction parameters.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
