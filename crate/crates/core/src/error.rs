use thiserror::Error;

/// Errors raised by the exact kernels and the identity runner.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of an operation.
    #[error("{0}")]
    Domain(String),
    /// A malformed request: unknown ids, unparsable numerals, bad options.
    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
