use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PellError {
    /// Input outside an operation's domain (negative radicand, perfect-square `d`, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A caller-supplied witness does not satisfy the equation it claims to solve.
    #[error("contract violated: {0}")]
    Contract(String),
}

pub type Result<T, E = PellError> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> PellError {
    PellError::Domain(msg.into())
}

pub(crate) fn contract(msg: impl Into<String>) -> PellError {
    PellError::Contract(msg.into())
}
