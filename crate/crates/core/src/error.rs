use thiserror::Error;

/// Errors reported by the kernel.
#[derive(Debug, Error)]
pub enum Error {
    /// Operands live at different levels (lengths of grading vectors differ).
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(usize, usize),

    /// A structural precondition of an operation failed.
    #[error("{0}")]
    Precondition(String),

    /// Malformed input (JSON wire format, rationals, color words, ...).
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
