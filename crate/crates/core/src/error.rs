use thiserror::Error;

/// Errors surfaced by the engine, grouped so callers can map them to
/// exit codes: usage problems, malformed data, and numeric failures.
#[derive(Debug, Error)]
pub enum Error {
    /// Bad configuration or precondition violation caused by the caller.
    #[error("usage: {0}")]
    Usage(String),

    /// Malformed or missing input data; messages carry file/line context
    /// where available.
    #[error("data: {0}")]
    Data(String),

    /// Tensor shape mismatch inside the numeric core.
    #[error("shape mismatch in {op}: {detail}")]
    Shape { op: &'static str, detail: String },

    /// Non-finite values, exhausted probability mass, or a failed
    /// gradient check.
    #[error("numeric: {0}")]
    Numeric(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn data(msg: impl Into<String>) -> Self {
        Error::Data(msg.into())
    }

    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }
}
