use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid board: {0}")]
    InvalidBoard(String),

    #[error("cell {0:?} is not a cell of the board")]
    InvalidCell(Vec<usize>),

    #[error("unsupported rule: {0}")]
    UnsupportedRule(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("construction not applicable: {0}")]
    NotApplicable(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("malformed cell-set document: {0}")]
    Format(String),

    #[error("invalid json: {0}")]
    Json(#[from] serde_json::Error),
}
