use thiserror::Error;

/// Errors raised by the analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A J-partition was found but the similarity image still carries a
    /// negative entry beyond the zero tolerance.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("numeric failure: {0}")]
    NumericFailure(String),
    #[error("degenerate spectrum: {0}")]
    DegenerateSpectrum(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
