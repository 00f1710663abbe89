use thiserror::Error;

/// Error type shared by the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A quadrature or series failed to reach the requested tolerance.
    /// Carries the best estimate obtained and the error bound attached to it.
    #[error("accuracy error: {context} (best estimate {best:e}, error bound {bound:e})")]
    Accuracy {
        context: String,
        best: f64,
        bound: f64,
    },

    /// A numeric procedure (root bracketing, eigensolver, scaling) failed.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// Request exceeds the supported problem size.
    #[error("size error: {0}")]
    Size(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }

    pub(crate) fn size(msg: impl Into<String>) -> Self {
        Error::Size(msg.into())
    }
}
