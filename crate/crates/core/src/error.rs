use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("model error: {0}")]
    Model(String),
    #[error("mode error: {0}")]
    Mode(String),
    #[error("parse error at {path}: {msg}")]
    Parse { path: String, msg: String },
    #[error("size guard exceeded: {0}")]
    Guard(String),
    #[error("axiom violation: {0}")]
    Axiom(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the command-line driver.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 1,
            Error::Guard(_) => 3,
            _ => 2,
        }
    }
}

pub(crate) fn model_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Model(msg.into()))
}
