use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] hyperex_core::Error),
    #[error(transparent)]
    Bounds(#[from] hyperex_bounds::Error),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("search budget exhausted: {0}")]
    Budget(String),
    #[error("witness check failed: {0}")]
    Witness(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
