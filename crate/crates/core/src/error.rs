use thiserror::Error;

use crate::graph::EdgeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("edge {0} is not present in the graph")]
    AbsentEdge(EdgeId),

    #[error("edge {0} is not a member of the matching")]
    NotInMatching(EdgeId),

    #[error("graph has no edges")]
    EmptyGraph,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A hypothesis of a guarantee does not hold for the given input.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An outcome that a proven guarantee rules out. Seeing this means a bug.
    #[error("internal invariant broken: {0}")]
    Internal(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("generator gave up after {attempts} attempts")]
    AttemptsExhausted { attempts: usize },

    #[error("unknown named instance {0:?}")]
    UnknownInstance(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
