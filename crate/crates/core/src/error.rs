use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the exact and numeric routines in this crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A polynomial division that was required to be exact left a remainder.
    #[error("inexact division: {0}")]
    InexactDivision(String),

    /// A structural description could not be turned into a valid algebra.
    #[error("construction error: {0}")]
    Construction(String),

    /// The Cartan matrix is not invertible over the integers.
    #[error("Cartan matrix is not unimodular (det = {0})")]
    NotUnimodular(String),

    /// Vector or matrix sizes do not agree.
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A root finder exhausted its iteration budget.
    #[error("root finder did not converge after {iterations} iterations (max residual {residual:e})")]
    NonConvergence {
        iterations: usize,
        residual: f64,
        best: Vec<Complex64>,
    },

    /// Malformed input document.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn construction(msg: impl Into<String>) -> Self {
        Error::Construction(msg.into())
    }
}
