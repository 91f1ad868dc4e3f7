use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge {edge:?} for host {host}")]
    InvalidEdge { host: String, edge: Vec<usize> },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("search bound exceeded: {0}")]
    ExceedsCap(String),
    /// A loop measure failed to improve or a constructed object failed its
    /// own check. Always a bug.
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}
