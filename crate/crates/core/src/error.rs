use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed text input; `token` is the offending piece of the input.
    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    /// Arguments outside the domain of an operation (size mismatch, not an
    /// involution, generator index out of range, ...).
    #[error("{0}")]
    Domain(String),

    /// An exhaustive search was refused because its size guard was exceeded.
    #[error("resource guard exceeded: {0}")]
    Resource(String),

    /// Two routes that must agree did not. Never expected.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
