//! Directed graphs as a reference orientation plus a reorientation set.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, OrderedGraph, SignedEdgeSet};

/// An orientation of an [`OrderedGraph`]: the stored edge directions with
/// the edges of `reorient` reversed. This is `-_A Ğ` with `A = reorient`.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    graph: OrderedGraph,
    reorient: EdgeSet,
}

/// Minima of directed cycles and of directed cocycles.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ActivitySets {
    /// `O(Ğ)`: smallest edges of directed cycles.
    pub active: EdgeSet,
    /// `O*(Ğ)`: smallest edges of directed cocycles.
    pub dual_active: EdgeSet,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("graph", &self.graph)
            .field("reorient", &self.reorient)
            .finish()
    }
}

impl Digraph {
    /// The reference orientation of `graph`.
    pub fn new(graph: OrderedGraph) -> Digraph {
        Digraph {
            graph,
            reorient: EdgeSet::EMPTY,
        }
    }

    /// The orientation of `graph` reversing the edges of `a`.
    pub fn with_reorientation(graph: OrderedGraph, a: EdgeSet) -> Result<Digraph> {
        if !a.is_subset(graph.edges()) {
            return Err(Error::InvalidSubset {
                set: a,
                live: graph.edges(),
            });
        }
        Ok(Digraph { graph, reorient: a })
    }

    pub fn graph(&self) -> &OrderedGraph {
        &self.graph
    }

    /// Edges reversed with respect to the stored directions.
    pub fn reorientation(&self) -> EdgeSet {
        self.reorient
    }

    pub fn edges(&self) -> EdgeSet {
        self.graph.edges()
    }

    /// `-_A` of this digraph. Edges of `a` outside the graph are ignored.
    pub fn reoriented(&self, a: EdgeSet) -> Digraph {
        Digraph {
            graph: self.graph.clone(),
            reorient: (self.reorient ^ a) & self.graph.edges(),
        }
    }

    /// Every edge reversed.
    pub fn opposite(&self) -> Digraph {
        self.reoriented(self.graph.edges())
    }

    pub fn is_reversed(&self, e: EdgeId) -> bool {
        self.reorient.contains(e)
    }

    /// Tail and head of `e` in this orientation.
    pub fn direction(&self, e: EdgeId) -> (usize, usize) {
        let (u, v) = self.graph.endpoints(e);
        if self.is_reversed(e) {
            (v, u)
        } else {
            (u, v)
        }
    }

    /// Signs of a signed set of the underlying graph as seen in this orientation.
    pub fn signs(&self, s: &SignedEdgeSet) -> SignedEdgeSet {
        s.reoriented(self.reorient)
    }

    pub fn restrict(&self, f: EdgeSet) -> Result<Digraph> {
        let graph = self.graph.restrict(f)?;
        Ok(Digraph {
            reorient: self.reorient & f,
            graph,
        })
    }

    pub fn delete(&self, f: EdgeSet) -> Result<Digraph> {
        let graph = self.graph.delete(f)?;
        Ok(Digraph {
            reorient: self.reorient & graph.edges(),
            graph,
        })
    }

    pub fn contract(&self, f: EdgeSet) -> Result<Digraph> {
        let graph = self.graph.contract(f)?;
        Ok(Digraph {
            reorient: self.reorient & graph.edges(),
            graph,
        })
    }

    /// The minor `Ğ(F) / F'`.
    pub fn minor(&self, f: EdgeSet, f_inner: EdgeSet) -> Result<Digraph> {
        let graph = self.graph.minor(f, f_inner)?;
        Ok(Digraph {
            reorient: self.reorient & graph.edges(),
            graph,
        })
    }

    /// Cycles whose edges all run the same way around.
    pub fn directed_cycles(&self) -> Result<Vec<EdgeSet>> {
        Ok(self
            .graph
            .signed_cycles()?
            .iter()
            .filter(|c| self.signs(c).is_directed())
            .map(|c| c.support())
            .collect())
    }

    /// Cocycles whose edges all cross the cut the same way.
    pub fn directed_cocycles(&self) -> Result<Vec<EdgeSet>> {
        Ok(self
            .graph
            .signed_cocycles()?
            .iter()
            .filter(|c| self.signs(c).is_directed())
            .map(|c| c.support())
            .collect())
    }

    /// `O(Ğ)` and `O*(Ğ)`.
    pub fn activity_sets(&self) -> Result<ActivitySets> {
        let mins = |sets: Vec<EdgeSet>| sets.iter().filter_map(|s| s.min_edge()).collect::<EdgeSet>();
        Ok(ActivitySets {
            active: mins(self.directed_cycles()?),
            dual_active: mins(self.directed_cocycles()?),
        })
    }

    pub fn is_acyclic(&self) -> Result<bool> {
        Ok(self.directed_cycles()?.is_empty())
    }

    /// Every edge lies in a directed cycle.
    pub fn is_strongly_connected(&self) -> Result<bool> {
        Ok(self.directed_cocycles()?.is_empty())
    }

    /// Every edge lies in a directed cocycle and every directed cocycle
    /// contains `p`.
    pub fn is_bipolar(&self, p: EdgeId) -> Result<bool> {
        self.check_edge(p)?;
        let cocycles = self.directed_cocycles()?;
        let union = cocycles.iter().fold(EdgeSet::EMPTY, |acc, d| acc | *d);
        Ok(union == self.edges() && cocycles.iter().all(|d| d.contains(p)))
    }

    /// Every edge lies in a directed cycle and every directed cycle contains `p`.
    pub fn is_cyclic_bipolar(&self, p: EdgeId) -> Result<bool> {
        self.check_edge(p)?;
        let cycles = self.directed_cycles()?;
        let union = cycles.iter().fold(EdgeSet::EMPTY, |acc, c| acc | *c);
        Ok(union == self.edges() && cycles.iter().all(|c| c.contains(p)))
    }

    /// Union of all directed cycles, the cyclic flat `F_c`.
    pub fn cyclic_part(&self) -> Result<EdgeSet> {
        Ok(self
            .directed_cycles()?
            .iter()
            .fold(EdgeSet::EMPTY, |acc, c| acc | *c))
    }

    fn check_edge(&self, p: EdgeId) -> Result<()> {
        if self.edges().contains(p) {
            Ok(())
        } else {
            Err(Error::UnknownEdge(p))
        }
    }
}
