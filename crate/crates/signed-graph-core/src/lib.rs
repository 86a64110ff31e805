//! Simple signed graphs: every edge carries a sign in `{+1, -1}`, loops and
//! parallel edges are excluded.
//!
//! Vertices are `0`-based `usize` indices internally; all text formats
//! (edge lists, DOT) are 1-based. Edge order is significant — it fixes the
//! column order of the incidence matrices built downstream — so the graph
//! stores edges as a sequence, canonicalized endpoint-wise (`u < v`) but
//! never reordered.

mod classify;
mod dot;
mod generate;
mod graph;
mod parse;

pub use classify::{
    classify_spanning_subgraph, Component, ComponentKind, ComponentReport, SubgraphMask,
};
pub use dot::emit_dot;
pub use generate::{
    complete, cycle, extended_paw, generate, path, paw, random_signed_graph, GeneratorSpec,
};
pub use graph::{Edge, Sign, SignedGraph};
pub use parse::{parse_edge_list, to_edge_list};

/// Errors from graph construction, parsing, generation, and mask validation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    /// The edge list is missing its `n m` header line.
    #[error("missing header line 'n m'")]
    MissingHeader,

    /// A line could not be parsed as the expected record.
    #[error("line {line}: malformed input {content:?}: {reason}")]
    MalformedLine {
        line: usize,
        content: String,
        reason: String,
    },

    /// The header promised a different number of edges.
    #[error("header declares {expected} edges but the list contains {found}")]
    EdgeCountMismatch { expected: usize, found: usize },

    /// Loops are not allowed in a simple signed graph.
    #[error("edge ({u},{v}) is a loop")]
    LoopEdge { u: usize, v: usize },

    /// Each unordered vertex pair may carry at most one edge.
    #[error("duplicate edge ({u},{v})")]
    DuplicateEdge { u: usize, v: usize },

    /// A vertex index fell outside `1..=n`.
    #[error("vertex {vertex} is out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },

    /// A sign token was not one of `+`, `-`, `1`, `-1`.
    #[error("invalid sign token {token:?} (expected one of +, -, 1, -1)")]
    InvalidSign { token: String },

    /// A generator was called with unusable parameters.
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),

    /// A subgraph mask referenced a nonexistent edge.
    #[error("edge index {index} is out of range (graph has {m} edges)")]
    EdgeIndexOutOfRange { index: usize, m: usize },
}

pub type Result<T> = std::result::Result<T, GraphError>;
