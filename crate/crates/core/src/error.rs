use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("partition size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("operad mismatch: {0}")]
    OperadMismatch(String),

    #[error("subspace is not stable: {0}")]
    NotStable(String),

    #[error("arity {arity} exceeds the configured cap {cap}")]
    CapExceeded { arity: usize, cap: usize },

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
