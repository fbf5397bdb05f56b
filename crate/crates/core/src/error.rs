use thiserror::Error;

use crate::digraph::NodeId;

/// Errors raised by graph construction and the analyses built on top of it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on node {0}")]
    SelfLoop(NodeId),
    #[error("symmetric pair {0} <-> {1}")]
    SymmetricPair(NodeId, NodeId),
    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(NodeId, NodeId),
    #[error("node id {id} out of range for a graph with {node_count} nodes")]
    IdOutOfRange { id: u64, node_count: usize },
    #[error("graph has no nodes")]
    EmptyGraph,
    #[error("{0} -> {1} is not an arc")]
    NotAnArc(NodeId, NodeId),
    #[error("{0} -> {1} is not a parent-child arc of the layering")]
    NotParentChild(NodeId, NodeId),
    #[error("split boundary {boundary} outside 1..={last_layer}")]
    BoundaryOutOfRange { boundary: usize, last_layer: usize },
    #[error("layer of {layer_size} nodes cannot give every node {degree} interior neighbors")]
    LayerTooSmall { layer_size: usize, degree: usize },
    #[error("layer of {layer_size} nodes with interior degree {degree} forces a symmetric pair")]
    OrientationInfeasible { layer_size: usize, degree: usize },
    #[error("node {0} is not reachable from the root")]
    UnreachableNode(NodeId),
    #[error("triangle ({0}, {1}, {2}) matches none of the six layer patterns")]
    UnclassifiableTriangle(NodeId, NodeId, NodeId),
    #[error("a directed cycle needs at least 3 nodes, got {0}")]
    CycleTooShort(usize),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;
