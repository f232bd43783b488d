use thiserror::Error;

use crate::graph::VertexId;

/// Errors raised while building graphs, spaces, and instances or while
/// evaluating weights.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("arc {arc} has endpoint {vertex} outside of 0..{vertex_count}")]
    EndpointOutOfRange {
        arc: usize,
        vertex: VertexId,
        vertex_count: usize,
    },
    #[error("parallel arc ({tail}, {head}) appears more than once")]
    ParallelArc { tail: VertexId, head: VertexId },
    #[error("source {source_vertex} is not a vertex of a graph with {vertex_count} vertices")]
    SourceOutOfRange {
        source_vertex: VertexId,
        vertex_count: usize,
    },
    #[error("weight space holds data for {space} arcs but the graph has {graph}")]
    ArcCountMismatch { space: usize, graph: usize },
    #[error("weight `{0}` does not belong to this weight space")]
    DomainMismatch(String),
    #[error("no update entry for weight `{weight}` on arc {arc}")]
    MissingUpdateEntry { weight: String, arc: usize },
    #[error("the weight space has no linear extension oracle")]
    NoLeo,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("strict dominance pairs are cyclic: `{0}` would dominate itself")]
    CyclicOrder(String),
    #[error("FIFO violated on arc {arc} between breakpoints {first} and {second}")]
    FifoViolation { arc: usize, first: String, second: String },
    #[error("mu-bounded is declared but no mu value is given")]
    MissingMu,
    #[error("path enumeration exceeded its budget of {budget} nodes")]
    BudgetExceeded { budget: usize },
}
