//! The error type shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong when building or combining exact classes.
///
/// All operations are pure, so an `Err` never leaves partial state behind.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on an operation's input was violated. The message
    /// names the offending quantity.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Two classes or bundles live over projective spaces of different
    /// dimension.
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// Series inversion needs constant term 1; the offending constant term
    /// is carried in decimal.
    #[error("class is not invertible: constant term is {constant}, expected 1")]
    NotInvertible { constant: String },
}

pub type Result<T> = std::result::Result<T, Error>;
