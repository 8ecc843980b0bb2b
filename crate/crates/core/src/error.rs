use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input outside the documented domain (bad N, k, label, twist, ...).
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A computed object failed a structural self-check. This always
    /// indicates a construction bug, never bad input.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
