use thiserror::Error;

use crate::exactlin::Scalar;
use crate::operad::Violation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown catalog operad {0:?}")]
    UnknownOperad(String),

    #[error("unknown generator label {0:?}")]
    UnknownLabel(String),

    #[error("invalid presentation: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    InvalidPresentation(Vec<Violation>),

    #[error("unit action is not normalized: alpha(star) = {alpha}, beta(star) = {beta}")]
    NotNormalized { alpha: Box<Scalar>, beta: Box<Scalar> },

    #[error("unit action does not satisfy the compatibility equations")]
    IncompatibleAction,

    #[error("canonical space {kind} needs n >= {min}, got {n}")]
    TooFewGenerators { kind: &'static str, min: usize, n: usize },

    #[error("internal error: {0}")]
    Internal(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
