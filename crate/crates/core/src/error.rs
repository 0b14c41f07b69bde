use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text (graph, motif or set-system files).
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Structurally valid input that violates an operation's requirements
    /// (wrong coloring mode, empty motif, size mismatch, ...).
    #[error("{0}")]
    Input(String),

    /// An exhaustive oracle refused to run because the instance exceeds its budget.
    #[error("oracle budget exceeded: {0}")]
    Budget(String),

    /// A candidate solution failed verification against its instance.
    #[error("invalid solution: {0}")]
    InvalidSolution(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
