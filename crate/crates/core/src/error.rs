use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("quiver has an oriented cycle; its path algebra is infinite-dimensional")]
    CyclicQuiver,
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("neither factor is projective over {0}")]
    NotProjective(String),
    #[error("resolution did not terminate within {cap} steps")]
    CapExceeded { cap: usize },
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    #[error("not an idempotent: {0}")]
    NotIdempotent(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
