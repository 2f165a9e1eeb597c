use thiserror::Error;

/// Error type shared by the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A curve specification is not closed, not simple, or otherwise unusable.
    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    /// A scalar argument is outside the domain of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Kernel evaluated at a point where it is singular (x == y).
    #[error("singular kernel evaluation: {0}")]
    Singular(String),

    /// A dense factorization or solve failed or looks numerically singular.
    #[error("conditioning: {0}")]
    Conditioning(String),

    /// Symmetrization residual or eigen-decomposition diagnostics failed.
    #[error("spectral decomposition: {0}")]
    Spectral(String),

    /// An operation's documented precondition was not met.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
