use thiserror::Error;

/// Errors raised by the library.
///
/// The variants map one-to-one onto the CLI exit codes: parameter errors and
/// refusals are caller mistakes, budget refusals ask for a cheaper method, and
/// internal errors mean an identity the construction relies on did not hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("refused: {0}")]
    Refused(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}
