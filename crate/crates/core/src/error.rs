use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input violates a precondition (zero divisor, `a_0 = 0`, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A numeric procedure failed: non-convergence, singular system, overflow.
    #[error("numeric error: {0}")]
    Numeric(String),
    /// Equation text could not be parsed.
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    /// Missing or malformed command-line input.
    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }
}
