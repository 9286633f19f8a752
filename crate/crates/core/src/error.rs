use thiserror::Error;

use crate::rootdata::Weight;

/// Errors raised by the domain operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("matrix is singular")]
    Singular,

    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u64, u64),

    #[error("out of supported range: {0}")]
    OutOfRange(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("twisted traces need a twining-character model; sigma must be the identity")]
    NontrivialSigma,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
