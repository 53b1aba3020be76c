//! The active bijection of ordered graphs.
//!
//! An [`OrderedGraph`] is a multigraph whose edges are numbered `1..=n`.
//! A [`Digraph`] orients it. The library computes active filtrations and
//! partitions of orientations, the active spanning tree of an orientation,
//! the refined bijection between reorientations and edge subsets, and the
//! Tutte polynomial by several formulas that check each other.
//!
//! ```
//! use active_bijection::{EdgeSet, OrderedGraph, tutte};
//!
//! let k3 = OrderedGraph::new(3, &[(0, 1), (0, 2), (1, 2)])?;
//! assert_eq!(tutte::tutte_by_trees(&k3)?.to_string(), "x^2+x+y");
//! assert_eq!(k3.spanning_trees()?.len(), 3);
//! # let _ = EdgeSet::EMPTY;
//! # Ok::<(), active_bijection::Error>(())
//! ```

pub mod activity;
pub mod bijection;
pub mod error;
pub mod filtration;
pub mod graph;
pub mod orientation;
pub mod tutte;

pub use error::{Error, Result};
pub use graph::{EdgeId, EdgeKind, EdgeSet, Limits, OrderedGraph, Sign, SignedEdgeSet};
pub use orientation::{ActivitySets, Digraph};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/activities.md")]
    mod activities {}
    #[doc = include_str!("../../../book/src/filtrations.md")]
    mod filtrations {}
    #[doc = include_str!("../../../book/src/bijection.md")]
    mod bijection {}
    #[doc = include_str!("../../../book/src/deletion-contraction.md")]
    mod deletion_contraction {}
    #[doc = include_str!("../../../book/src/tutte.md")]
    mod tutte {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
