use thiserror::Error;

/// Errors produced by the library. Mathematical property failures are not
/// errors; they are reported as `false` verdicts by the checking functions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("truncation too short: {what} (need at least {required})")]
    TruncationTooShort { what: String, required: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
