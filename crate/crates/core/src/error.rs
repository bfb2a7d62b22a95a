use thiserror::Error;

use crate::lie::Violation;

/// Errors raised by the library. Mathematical outcomes such as an
/// inconsistent linear system or a vanishing Massey product are values,
/// not errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("the zero polynomial has no squarefree part")]
    ZeroPolynomial,

    #[error("polynomial {0} is not squarefree")]
    NotSquarefree(String),

    #[error("dimension {0} exceeds the hard cap of {cap}", cap = crate::lie::HARD_DIM_CAP)]
    TooLarge(usize),

    #[error("invalid Lie algebra: {0}")]
    Invalid(Violation),

    #[error("the Lie algebra is not solvable")]
    NotSolvable,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("finite group generated by the supplied matrices has more than {bound} elements")]
    GroupTooLarge { bound: usize },

    #[error("ambient dimension {0} is odd; a symplectic form needs even dimension")]
    OddDimension(usize),

    /// An exact self-check failed. This indicates a bug in the arithmetic,
    /// not a property of the input.
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification used for exit codes and report stages.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    /// The input is not a Lie algebra.
    Validation,
    /// The input is well-formed but outside what an operation accepts.
    Precondition,
    /// A self-check failed.
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Invalid(_) => ErrorKind::Validation,
            Error::Consistency(_) | Error::ZeroPolynomial | Error::NotSquarefree(_) => ErrorKind::Internal,
            _ => ErrorKind::Precondition,
        }
    }
}
