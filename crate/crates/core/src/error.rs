use thiserror::Error;

use crate::graph::{Partition, VertexId};

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(VertexId),
    #[error("edge ({0}, {1}) joins two vertices of the same partition")]
    IntraPartitionEdge(VertexId, VertexId),
    #[error("edge endpoint {0} is not a declared vertex")]
    UnknownEndpoint(VertexId),
    #[error("vertex {0} does not exist in this graph")]
    UnknownVertex(VertexId),
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("vertex family spans both partitions")]
    MixedPartition,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("condition II family needs at least two vertices, got {0}")]
    FamilyTooSmall(usize),
    #[error("degenerate graph: {0}")]
    DegenerateGraph(String),
    #[error("no star vertex in partition {0}")]
    NoStarVertex(Partition),
    #[error("invalid member set: {0}")]
    InvalidMembers(String),
    #[error("expansion exceeded the iteration safety cap of {0}; this indicates a bug")]
    IterationCapExceeded(usize),
    #[error("instance too large for exhaustive search: {count} non-star vertices exceeds cap {cap}")]
    InstanceTooLarge { count: usize, cap: usize },
    #[error("edge count {m} outside valid range [{lo}, {hi}]")]
    EdgeCountOutOfRange { m: usize, lo: usize, hi: usize },
    #[error("cannot reach {target} edges with {nodes} nodes for this model")]
    UnachievableDensity { nodes: usize, target: usize },
    #[error("no connected bipartite subgraph with {target} vertices found within {attempts} attempts")]
    NoBipartiteSubgraphFound { target: usize, attempts: usize },
    #[error("cannot aggregate an empty sample")]
    EmptySample,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
