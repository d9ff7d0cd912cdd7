use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("vertex {0} has no incident edge")]
    IsolatedVertex(Vertex),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("vertex count {0} outside 1..=63")]
    TooManyVertices(usize),
    #[error("vertex {0} is not a legal move")]
    IllegalMove(Vertex),
    #[error("vertex {0} is not totally dominated")]
    NotDominated(Vertex),
    #[error("the game is already over")]
    TerminalState,
    #[error("graph is not a tree")]
    NotATree,
    #[error("{0}")]
    OutOfBounds(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
