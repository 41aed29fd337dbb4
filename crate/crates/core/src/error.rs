use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input exceeds a size limit of the requested operation.
    #[error("capacity exceeded: {what} (got {got}, limit {limit})")]
    Capacity {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("invalid edge ({u}, {v})")]
    InvalidEdge { u: usize, v: usize },
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("unknown graph name {0:?}")]
    UnknownGraph(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("numeric error: {0}")]
    Numeric(String),
    /// Two routes that must agree did not. Always a bug.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn capacity(what: &'static str, got: usize, limit: usize) -> Self {
        Error::Capacity { what, got, limit }
    }

    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
