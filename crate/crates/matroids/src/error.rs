use thiserror::Error;

/// Errors surfaced by fallible operations.
///
/// `Input` covers violated preconditions and malformed data (CLI exit code 2),
/// `Capacity` covers requests beyond the supported ground-set or search sizes
/// (CLI exit code 3).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn capacity_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Capacity(msg.into()))
}
