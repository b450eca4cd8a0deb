use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library reports. Variants carry enough context for the
/// CLI to print a one-line diagnosis.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("parallel edge between {0} and {1}")]
    ParallelEdge(VertexId, VertexId),
    #[error("edge index {index} out of range (graph has {m} edges)")]
    EdgeOutOfRange { index: usize, m: usize },
    #[error("no edge between {0} and {1}")]
    NoSuchEdge(VertexId, VertexId),
    #[error("edges {0} and {1} share endpoint {2}")]
    SharedEndpoint(usize, usize, VertexId),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("instance too large for exhaustive search: {what} = {actual} exceeds limit {limit}")]
    LimitExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("no perfect matching")]
    NoPerfectMatching,
    #[error("ground set mismatch: {0}")]
    GroundSet(String),
    #[error("invalid tree decomposition: {0}")]
    Decomposition(String),
    #[error("invalid source solution: {0}")]
    Source(String),
    #[error("invalid certificate: {0}")]
    Certificate(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
