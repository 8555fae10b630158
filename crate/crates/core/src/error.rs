use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Invalid space specification or invalid generator reference.
    #[error("configuration error: {0}")]
    Config(String),
    /// An operation was called with arguments it does not accept.
    #[error("usage error: {0}")]
    Usage(String),
    /// An operator produced a component outside the requested basis slice.
    #[error("range error: {0}")]
    Range(String),
    /// An identity that must hold by construction failed; signals a sign bug.
    #[error("integrity error: {0}")]
    Integrity(String),
    /// A documented precondition does not hold for the input.
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
