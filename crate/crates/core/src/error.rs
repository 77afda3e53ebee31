use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Inputs violate a precondition (non-coprime arguments, zero modulus, ...).
    #[error("validation error: {0}")]
    Validation(String),
    /// Inversion of something with no inverse.
    #[error("singularity: {0}")]
    Singularity(String),
    /// A value that is an integer by theorem came out otherwise. Always a bug.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn validation(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}
