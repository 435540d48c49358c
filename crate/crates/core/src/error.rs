use thiserror::Error;

/// Errors produced by graph construction, walk counting and numerical routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("resource limit: {what} exceeded budget of {budget}")]
    ResourceLimit { what: String, budget: usize },

    #[error("numerical failure: {message}")]
    NumericalFailure {
        message: String,
        estimate: Option<f64>,
    },

    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
