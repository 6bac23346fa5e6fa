use thiserror::Error;

use crate::expr::ParseError;

/// Errors produced by the algebra engine and the verification layers built on it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unsupported matrix dimension {0} (only 2 and 4 are supported)")]
    UnsupportedDimension(usize),
    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("malformed matrix: expected {expected} entries, got {actual}")]
    MalformedMatrix { expected: usize, actual: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("invalid generator symbol {0:?}")]
    InvalidSymbol(String),
    #[error("invalid phase {0}: expected one of 1, -1, i, -i")]
    InvalidPhase(String),
    #[error("expression is not a multiple of a single Clifford basis element")]
    NotMonomial,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("off-shell input: {0}")]
    OffShell(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown operator {0:?}")]
    UnknownOperator(String),
    #[error("operation requires a constant 4-potential")]
    NonConstantPotential,
}

pub type Result<T> = std::result::Result<T, Error>;
