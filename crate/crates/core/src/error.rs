use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("vertex {0} is an endpoint of two matching edges")]
    SharedEndpoint(Vertex),
    #[error("edge {0}-{1} is not in the graph")]
    EdgeNotInGraph(Vertex, Vertex),
    #[error("graph is not connected")]
    Disconnected,
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("header declares {declared} edges but {found} were read")]
    EdgeCount { declared: usize, found: usize },
    #[error("missing header line")]
    MissingHeader,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowError {
    #[error("vertices {0} and {1} are adjacent; no vertex cut separates them")]
    Adjacent(Vertex, Vertex),
    #[error("source and sink coincide at {0}")]
    SameVertex(Vertex),
    #[error("a vertex cut needs at least two vertices")]
    TooSmall,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Hall's condition fails: `witness` has fewer than `witness.len()` neighbours.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BipartiteError {
    #[error("Hall violation: {} left vertices see only {} right vertices", witness.len(), neighborhood.len())]
    HallViolation {
        witness: Vec<Vertex>,
        neighborhood: Vec<Vertex>,
    },
    #[error("forced edge {0}-{1} is not a left-right edge of the view")]
    ForcedEdgeOutsideView(Vertex, Vertex),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("enumeration budget of {0} matchings exhausted")]
    BudgetExceeded(u64),
    #[error("graph has no edges")]
    Edgeless,
}
