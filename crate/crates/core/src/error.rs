use thiserror::Error;

/// Failure modes shared by every module of the crate.
///
/// `Argument` covers inputs that are malformed before any numerics run
/// (index out of range, mismatched dimensions, parameter outside its domain).
/// `Validation` covers values that fail a physical check: a matrix that is not
/// a density matrix, a channel that is not trace preserving, a ket that is not
/// normalized.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("validation failed: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn argument(msg: impl Into<String>) -> Error {
    Error::Argument(msg.into())
}

pub(crate) fn validation(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}
