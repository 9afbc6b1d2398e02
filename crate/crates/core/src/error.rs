use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("element index {index} out of range for board of size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("winning sets must be non-empty")]
    EmptyEdge,
    #[error("board of {n} elements exceeds the supported capacity of {capacity}")]
    Capacity { n: usize, capacity: usize },
    #[error("resource guard exceeded: {what} (limit {limit})")]
    Guard { what: &'static str, limit: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),
    #[error("move restriction rejected: {0}")]
    Restriction(String),
    #[error("illegal move: {0}")]
    IllegalMove(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("unknown strategy `{0}`")]
    UnknownStrategy(String),
    #[error("malformed document: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    /// True for errors raised by a resource guard rather than bad input.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. } | Error::Capacity { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
