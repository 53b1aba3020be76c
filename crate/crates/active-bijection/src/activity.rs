//! Tree activities, subset activities and orientation activities.

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, OrderedGraph};
use crate::orientation::Digraph;

/// Internally and externally active edges of a spanning tree.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct TreeActivities {
    /// `Int(T)`: tree edges that are the smallest of their fundamental cocycle.
    pub internal: EdgeSet,
    /// `Ext(T)`: other edges that are the smallest of their fundamental cycle.
    pub external: EdgeSet,
}

/// The four activity sets of a subset `A`, read from the interval that
/// contains `A`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SubsetActivities {
    /// `Int(T) ∩ A`.
    pub int_: EdgeSet,
    /// `Int(T) \ A`.
    pub p: EdgeSet,
    /// `Ext(T) \ A`.
    pub ext: EdgeSet,
    /// `Ext(T) ∩ A`.
    pub q: EdgeSet,
}

/// The four orientation parameters of `-_A Ğ` relative to the reference `Ğ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct OrientationActivities {
    /// `O*(-_A Ğ) \ A`.
    pub theta_star: EdgeSet,
    /// `O*(-_A Ğ) ∩ A`.
    pub theta_star_bar: EdgeSet,
    /// `O(-_A Ğ) \ A`.
    pub theta: EdgeSet,
    /// `O(-_A Ğ) ∩ A`.
    pub theta_bar: EdgeSet,
}

fn compute_tree_activities(g: &OrderedGraph, t: EdgeSet) -> TreeActivities {
    let mut internal = EdgeSet::EMPTY;
    let mut external = EdgeSet::EMPTY;
    for e in g.edges() {
        let support = if t.contains(e) {
            g.fundamental_cocycle_unchecked(t, e).support()
        } else {
            g.fundamental_cycle_unchecked(t, e).support()
        };
        if support.min_edge() == Some(e) {
            if t.contains(e) {
                internal.insert(e);
            } else {
                external.insert(e);
            }
        }
    }
    TreeActivities { internal, external }
}

/// `Int(T)` and `Ext(T)`.
pub fn tree_activities(g: &OrderedGraph, t: EdgeSet) -> Result<TreeActivities> {
    if !g.is_spanning_tree(t) {
        return Err(Error::Domain(format!("{t:?} is not a spanning tree")));
    }
    Ok(compute_tree_activities(g, t))
}

/// Every spanning tree with its activities, cached per graph.
pub(crate) fn all_tree_activities(g: &OrderedGraph) -> Result<Vec<(EdgeSet, EdgeSet, EdgeSet)>> {
    let forests = g.spanning_forests()?;
    let data = g.data();
    Ok(data
        .tree_activities
        .get_or_init(|| {
            forests
                .iter()
                .map(|&t| {
                    let a = compute_tree_activities(g, t);
                    (t, a.internal, a.external)
                })
                .collect()
        })
        .clone())
}

/// The interval `[T \ Int(T), T ∪ Ext(T)]`.
pub fn interval_of(g: &OrderedGraph, t: EdgeSet) -> Result<(EdgeSet, EdgeSet)> {
    let a = tree_activities(g, t)?;
    Ok((t - a.internal, t | a.external))
}

/// The spanning tree whose interval contains `a`.
pub fn locate_interval(g: &OrderedGraph, a: EdgeSet) -> Result<EdgeSet> {
    if !a.is_subset(g.edges()) {
        return Err(Error::InvalidSubset {
            set: a,
            live: g.edges(),
        });
    }
    let mut found = None;
    for (t, int, ext) in all_tree_activities(g)? {
        if (t - int).is_subset(a) && a.is_subset(t | ext) {
            if found.is_some() {
                return Err(Error::Invariant(format!("{a:?} lies in two intervals")));
            }
            found = Some(t);
        }
    }
    found.ok_or_else(|| Error::Invariant(format!("{a:?} lies in no interval")))
}

/// `(Int(A), P(A), Ext(A), Q(A))`.
pub fn subset_activities(g: &OrderedGraph, a: EdgeSet) -> Result<SubsetActivities> {
    let t = locate_interval(g, a)?;
    let acts = compute_tree_activities(g, t);
    Ok(SubsetActivities {
        int_: acts.internal & a,
        p: acts.internal - a,
        ext: acts.external - a,
        q: acts.external & a,
    })
}

/// `(Θ*, Θ̄*, Θ, Θ̄)` of `a` relative to the reference `reference`.
pub fn orientation_activities(reference: &Digraph, a: EdgeSet) -> Result<OrientationActivities> {
    if !a.is_subset(reference.edges()) {
        return Err(Error::InvalidSubset {
            set: a,
            live: reference.edges(),
        });
    }
    let acts = reference.reoriented(a).activity_sets()?;
    Ok(OrientationActivities {
        theta_star: acts.dual_active - a,
        theta_star_bar: acts.dual_active & a,
        theta: acts.active - a,
        theta_bar: acts.active & a,
    })
}
