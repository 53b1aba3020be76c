use thiserror::Error;

use crate::graph::{EdgeId, EdgeSet};

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A subset that should lie inside the live edge set does not.
    #[error("edge set {set:?} is not contained in the live edges {live:?}")]
    InvalidSubset { set: EdgeSet, live: EdgeSet },

    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An enumeration would exceed the configured limits.
    #[error("resource limit: {what} needs {needed} edges, limit is {limit}")]
    ResourceLimit {
        what: &'static str,
        needed: usize,
        limit: usize,
    },

    /// The input does not satisfy a documented precondition.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An internal consistency check failed. This signals a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),

    /// An edge rank outside `1..=64` was requested.
    #[error("edge rank {0} out of range")]
    BadRank(usize),

    /// The edge is not live in this graph.
    #[error("edge {0} is not an edge of this graph")]
    UnknownEdge(EdgeId),

    /// The graph description is malformed.
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
}

pub type Result<T> = std::result::Result<T, Error>;
