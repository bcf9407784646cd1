//! Error taxonomy shared by every module.

/// Library-wide error type.
///
/// `InvariantViolation` is reserved for situations where a structural claim
/// the algorithms rely on turned out false at runtime; its payload carries
/// enough state to reproduce the offending instance in a bug report.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("parse error (line {line}): {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("unsupported input: {0}")]
    UnsupportedInput(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Error {
        Error::InvalidParameter(msg.into())
    }

    pub fn limit(msg: impl Into<String>) -> Error {
        Error::ResourceLimit(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Error {
        Error::Parse { line, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
