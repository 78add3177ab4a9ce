use thiserror::Error;

/// Errors raised while building or reading graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices, the limit is {max}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters {
        family: &'static str,
        reason: String,
    },
}

/// A parse failure, located by line (edge lists) or byte offset (graph6).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("offset {offset}: {message}")]
    Offset { offset: usize, message: String },
    #[error("json: {0}")]
    Json(String),
}

/// Failures of the cover solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("search timed out with {lower} <= T <= {upper}")]
    Timeout { lower: usize, upper: usize },
    #[error("{k}-tessellability search timed out")]
    DecisionTimeout { k: usize },
    #[error("tessellation stream truncated at {emitted} before the edges were covered ({uncovered} left)")]
    Incomplete { emitted: usize, uncovered: usize },
}
