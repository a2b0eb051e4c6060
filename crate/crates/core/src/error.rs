use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected} vertices, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("internal error: {0}")]
    Internal(String),

    #[error("guard exceeded: {0}")]
    Guard(String),

    #[error("{}:{line}: {msg} (token `{token}`)", file.display())]
    Parse { file: PathBuf, line: usize, token: String, msg: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
