use thiserror::Error;

/// Errors produced by grid construction, field arithmetic, and runs.
#[derive(Debug, Error)]
pub enum CnsError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("non-finite field values: {0}")]
    NonFinite(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("snapshot format error: {0}")]
    Snapshot(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("blow-up at t = {time}: {detail}")]
    BlowUp { time: f64, detail: String },
}

pub type Result<T> = std::result::Result<T, CnsError>;
