use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph must have between 1 and 64 vertices, got {0}")]
    VertexCount(usize),

    #[error("capacity exceeded: the product needs {required} vertices, at most 64 are supported")]
    CapacityExceeded { required: usize },

    #[error("invalid adjacency: {0}")]
    InvalidAdjacency(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("invalid graph spec `{spec}`: {reason}")]
    BadSpec { spec: String, reason: String },

    #[error("not identifiable: {0}")]
    NotIdentifiable(String),

    #[error("vertex {0} is isolated, so no total dominating set exists")]
    IsolatedVertex(usize),

    #[error("infeasible constraint system: constraint {0} is empty")]
    Infeasible(usize),

    #[error("enumeration overflow: more than {cap} solutions")]
    EnumerationOverflow { cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("excluded case: {0}")]
    ExcludedCase(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
