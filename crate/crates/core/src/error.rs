//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied parameter is outside the supported domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A method was requested outside the range it supports.
    #[error("unsupported method: {0}")]
    UnsupportedMethod(String),

    /// A matrix operation was given incompatible shapes.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// An operation requiring a square matrix received a rectangular one.
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    /// The polynomial is not bimonic (first and last coefficients 1).
    #[error("polynomial is not bimonic")]
    NotBimonic,

    /// The zero polynomial was supplied where a nonzero one is required.
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,

    /// A Laurent polynomial with negative exponents was supplied where an
    /// ordinary polynomial is required.
    #[error("polynomial has negative exponents (min_exp = {0})")]
    NegativeExponent(i64),

    /// An input polynomial has repeated complex roots.
    #[error("polynomial has repeated roots")]
    RepeatedRoots,

    /// A division that is claimed to be exact left a remainder; this means an
    /// internal identity was violated.
    #[error("inexact division in {0}")]
    InexactDivision(&'static str),

    /// A recurrence cannot be generated in the requested direction.
    #[error("recurrence generation requires a unit coefficient: {0}")]
    NonUnitCoefficient(&'static str),

    /// Seed terms passed to a recurrence do not satisfy it.
    #[error("initial terms do not satisfy the recurrence")]
    InconsistentSeed,

    /// A structural invariant that must hold for every valid input failed;
    /// results cannot be trusted.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    /// True when the error is the caller's fault (bad arguments) rather than
    /// an internal inconsistency. The CLI maps this to exit code 2.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::InvalidParameter(_) | Error::UnsupportedMethod(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
