use thiserror::Error;

/// Errors produced by constructions, checkers and certificate I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A cycle combination was requested on a square whose edges do not
    /// currently satisfy the recoloring precondition.
    #[error("invalid recolor: {0}")]
    InvalidRecolor(String),

    /// The construction has no supported route for this instance.
    #[error("unsupported instance: {0}")]
    UnsupportedInstance(String),

    #[error("malformed certificate: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
