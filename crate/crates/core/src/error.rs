use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("grade set mismatch: {0}")]
    GradeMismatch(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
