use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the lattice computations and the report runner.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A momentum component sits on or beyond a tangent pole, `|k_mu eps| >= 1/2`.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("momentum not quantized for periodic storage: {0}")]
    Quantization(String),

    #[error("no real root: {0}")]
    NoRealRoot(String),

    #[error("no null vector: {0}")]
    NoNullVector(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
