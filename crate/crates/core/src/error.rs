use thiserror::Error;

/// Errors raised by the numeric and geometric operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A hypothesis of a proposition checker does not hold for the input.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A construction collapsed (point at an endpoint, parallel lines, ...).
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("invalid precision: {0}")]
    Precision(String),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("usage error: {0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
