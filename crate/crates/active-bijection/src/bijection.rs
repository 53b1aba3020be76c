//! The active bijection at its three levels: uniactive, canonical and
//! refined. Each is available as a direct map and as a deletion/contraction
//! recursion, and the inverses are computed from spanning trees in one pass.

use std::collections::HashMap;

use crate::activity::{tree_activities, TreeActivities};
use crate::error::{Error, Result};
use crate::filtration::{active_minors, active_partition, ActivePartition, Filtration, PartKind};
use crate::graph::{EdgeId, EdgeSet, OrderedGraph, Sign, SignedEdgeSet};
use crate::orientation::Digraph;

/// The two opposite reorientations mapped to a uniactive tree.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PreimagePair {
    /// The member in which the smallest edge keeps its stored direction.
    pub first: EdgeSet,
    /// `first` with every edge reversed.
    pub second: EdgeSet,
}

impl PreimagePair {
    pub fn contains(&self, a: EdgeSet) -> bool {
        a == self.first || a == self.second
    }
}

/// Output of the single pass over a spanning tree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TreeActiveData {
    /// The active partition of the tree.
    pub partition: ActivePartition,
    /// All reorientations of the stored orientation mapped to the tree by
    /// [`alpha`], sorted.
    pub preimages: Vec<EdgeSet>,
    /// When a reference and a subset `X` were given: the unique `A` with
    /// `alpha_refined(reference, A) = X`.
    pub refined_preimage: Option<EdgeSet>,
}

fn opposite_in(d: &Digraph, s: &SignedEdgeSet, x: EdgeId, y: EdgeId) -> bool {
    let s = d.signs(s);
    s.sign(x) != s.sign(y)
}

fn criterion_holds(d: &Digraph, t: EdgeSet, cyclic: bool) -> bool {
    let g = d.graph();
    let p = g.edges().min_edge().expect("nonempty");
    for e in g.edges() {
        let s = if t.contains(e) {
            if !cyclic && e == p {
                continue;
            }
            g.fundamental_cocycle_unchecked(t, e)
        } else {
            if cyclic && e == p {
                continue;
            }
            g.fundamental_cycle_unchecked(t, e)
        };
        let a = s.support().min_edge().expect("nonempty");
        if a == e || !opposite_in(d, &s, a, e) {
            return false;
        }
    }
    true
}

/// Bipolar (`false`) or cyclic-bipolar (`true`) with respect to the smallest edge.
fn uniactive_kind(d: &Digraph) -> Result<bool> {
    let p = d
        .edges()
        .min_edge()
        .ok_or_else(|| Error::Precondition("empty digraph".into()))?;
    if d.is_bipolar(p)? {
        Ok(false)
    } else if d.is_cyclic_bipolar(p)? {
        Ok(true)
    } else {
        Err(Error::Precondition(format!(
            "digraph is neither bipolar nor cyclic-bipolar w.r.t. {p}"
        )))
    }
}

/// The fully optimal spanning tree of a bipolar or cyclic-bipolar digraph,
/// found by testing the sign criterion on every spanning tree. A
/// cyclic-bipolar input with at least two edges is also checked against
/// `α(-_p Ğ) \ {p} ∪ {p'}`.
pub fn alpha_uniactive(d: &Digraph) -> Result<EdgeSet> {
    let cyclic = uniactive_kind(d)?;
    let g = d.graph();
    let mut hits = g
        .spanning_trees()?
        .into_iter()
        .filter(|&t| criterion_holds(d, t, cyclic));
    let t = hits
        .next()
        .ok_or_else(|| Error::Invariant("no tree satisfies the criterion".into()))?;
    if hits.next().is_some() {
        return Err(Error::Invariant("two trees satisfy the criterion".into()));
    }
    if cyclic && g.edge_count() > 1 {
        let mut it = g.edges().iter();
        let (p, p2) = (it.next().unwrap(), it.next().unwrap());
        let dual = alpha_uniactive(&d.reoriented(EdgeSet::singleton(p)))?;
        if dual.without(p).with(p2) != t {
            return Err(Error::Invariant(format!(
                "active duality fails: {t:?} vs {dual:?}"
            )));
        }
    }
    Ok(t)
}

/// The active spanning tree: union of the fully optimal trees of the
/// active minors.
pub fn alpha(d: &Digraph) -> Result<EdgeSet> {
    let mut t = EdgeSet::EMPTY;
    for m in active_minors(d)? {
        t |= alpha_uniactive(&m.digraph)?;
    }
    Ok(t)
}

/// `α(-_A Ğ) \ (A ∩ O*(-_A Ğ)) ∪ (A ∩ O(-_A Ğ))` for the reference `Ğ`.
pub fn alpha_refined(reference: &Digraph, a: EdgeSet) -> Result<EdgeSet> {
    if !a.is_subset(reference.edges()) {
        return Err(Error::InvalidSubset {
            set: a,
            live: reference.edges(),
        });
    }
    let d = reference.reoriented(a);
    let t = alpha(&d)?;
    let acts = d.activity_sets()?;
    Ok((t - (a & acts.dual_active)) | (a & acts.active))
}

fn check_tree(g: &OrderedGraph, t: EdgeSet) -> Result<TreeActivities> {
    if !g.is_spanning_tree(t) {
        return Err(Error::Domain(format!("{t:?} is not a spanning tree")));
    }
    tree_activities(g, t)
}

/// Reversal bit for `e` so that it and `a` point opposite ways in `s`,
/// where `e` is positive in `s` and `reversed` holds the choices so far.
fn opposite_choice(s: &SignedEdgeSet, a: EdgeId, reversed: EdgeSet) -> bool {
    let a_minus = s.sign(a) == Some(Sign::Minus);
    !(a_minus ^ reversed.contains(a))
}

/// The two orientations mapped to a uniactive spanning tree, built in one
/// pass over the edges.
pub fn alpha_uniactive_inverse(g: &OrderedGraph, t: EdgeSet) -> Result<PreimagePair> {
    let acts = check_tree(g, t)?;
    let (i, e) = (acts.internal.len(), acts.external.len());
    if (i, e) != (1, 0) && (i, e) != (0, 1) {
        return Err(Error::Precondition(format!(
            "{t:?} is not uniactive: |Int| = {i}, |Ext| = {e}"
        )));
    }
    let mut reversed = EdgeSet::EMPTY;
    for ek in g.edges().iter().skip(1) {
        let s = if t.contains(ek) {
            g.fundamental_cocycle_unchecked(t, ek)
        } else {
            g.fundamental_cycle_unchecked(t, ek)
        };
        let a = s.support().min_edge().unwrap();
        if opposite_choice(&s, a, reversed) {
            reversed.insert(ek);
        }
    }
    Ok(PreimagePair {
        first: reversed,
        second: reversed ^ g.edges(),
    })
}

/// The single pass over a spanning tree: its active partition, all its
/// preimages under [`alpha`], and, given a reference and a subset `X` of
/// the interval of `t`, the preimage of `X` under [`alpha_refined`].
pub fn tree_active_data(
    g: &OrderedGraph,
    t: EdgeSet,
    refined: Option<(&Digraph, EdgeSet)>,
) -> Result<TreeActiveData> {
    let acts = check_tree(g, t)?;
    let (int, ext) = (acts.internal, acts.external);
    let (p_set, q_set, reference) = match refined {
        Some((r, x)) => {
            if r.graph() != g {
                return Err(Error::Domain("reference is an orientation of another graph".into()));
            }
            if !((t - int).is_subset(x) && x.is_subset(t | ext)) {
                return Err(Error::Domain(format!("{x:?} is outside the interval of {t:?}")));
            }
            (t - x, x - t, Some(r))
        }
        None => (EdgeSet::EMPTY, EdgeSet::EMPTY, None),
    };

    let mut part: HashMap<EdgeId, EdgeId> = HashMap::new();
    let is_internal = |part: &HashMap<EdgeId, EdgeId>, c: EdgeId| int.contains(part[&c]);
    let mut base = EdgeSet::EMPTY;
    let mut chosen = EdgeSet::EMPTY;
    for ek in g.edges() {
        let in_tree = t.contains(ek);
        let active = if in_tree { int.contains(ek) } else { ext.contains(ek) };
        if active {
            part.insert(ek, ek);
            // Arbitrary choice: stored direction. Refined choice: the
            // reference direction unless `ek` is in P or Q.
            if let Some(r) = reference {
                let flip = p_set.contains(ek) || q_set.contains(ek);
                if r.is_reversed(ek) ^ flip {
                    chosen.insert(ek);
                }
            }
            continue;
        }
        let s = if in_tree {
            g.fundamental_cocycle_unchecked(t, ek)
        } else {
            g.fundamental_cycle_unchecked(t, ek)
        };
        let earlier: Vec<EdgeId> = s.support().below(ek).iter().collect();
        // Outside the tree the rule looks for an internal edge, inside it
        // for an external one.
        let wanted_internal = !in_tree;
        let same_side = earlier
            .iter()
            .filter(|&&c| is_internal(&part, c) == wanted_internal)
            .map(|c| part[c])
            .max();
        let pk = match same_side {
            Some(pk) => pk,
            None => earlier
                .iter()
                .map(|c| part[c])
                .min()
                .ok_or_else(|| Error::Invariant(format!("edge {ek} has no earlier edge")))?,
        };
        part.insert(ek, pk);
        let a = s
            .support()
            .iter()
            .find(|c| part[c] == pk)
            .expect("part member");
        if opposite_choice(&s, a, base) {
            base.insert(ek);
        }
        if reference.is_some() && opposite_choice(&s, a, chosen) {
            chosen.insert(ek);
        }
    }

    let mut parts: HashMap<EdgeId, EdgeSet> = HashMap::new();
    for (&e, &pk) in &part {
        parts.entry(pk).or_default().insert(e);
    }
    let partition = ActivePartition::new(parts.into_iter().map(|(pk, edges)| {
        let kind = if int.contains(pk) { PartKind::Acyclic } else { PartKind::Cyclic };
        (edges, kind)
    }))?;
    let n = partition.parts.len();
    let mut preimages: Vec<EdgeSet> = (0u64..1 << n)
        .map(|mask| {
            partition
                .parts
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(base, |acc, (_, p)| acc ^ p.edges)
        })
        .collect();
    preimages.sort();
    let refined_preimage = reference.map(|r| chosen ^ r.reorientation());
    Ok(TreeActiveData {
        partition,
        preimages,
        refined_preimage,
    })
}

/// The active closure of `x` with respect to `t`. `x` must lie in
/// `Ext(t)` or in `Int(t)`.
pub fn active_closure(g: &OrderedGraph, t: EdgeSet, x: EdgeSet) -> Result<EdgeSet> {
    let acts = check_tree(g, t)?;
    closure_with(g, t, &acts, x)
}

fn closure_with(g: &OrderedGraph, t: EdgeSet, acts: &TreeActivities, x: EdgeSet) -> Result<EdgeSet> {
    if x.is_empty() {
        return Ok(x);
    }
    let external = if x.is_subset(acts.external) {
        true
    } else if x.is_subset(acts.internal) {
        false
    } else {
        return Err(Error::Domain(format!(
            "{x:?} is neither inside Ext or Int of {t:?}"
        )));
    };
    // Outside the tree in the external variant, inside it in the internal one.
    let side = if external { g.edges() - t } else { t };
    let active = if external { acts.external } else { acts.internal };
    let fundamental = |e: EdgeId| {
        if external {
            g.fundamental_cycle_unchecked(t, e).support()
        } else {
            g.fundamental_cocycle_unchecked(t, e).support()
        }
    };
    let mut a = x;
    loop {
        let mut next = a;
        for e in side & a {
            next |= fundamental(e);
        }
        for e in side - active - next {
            if fundamental(e).below(e).is_subset(next) {
                next.insert(e);
            }
        }
        if next == a {
            return Ok(a);
        }
        a = next;
    }
}

/// Builds the filtration from the single-pass partition.
fn filtration_by_single_pass(g: &OrderedGraph, t: EdgeSet) -> Result<Filtration> {
    Ok(Filtration::from_partition(&tree_active_data(g, t, None)?.partition))
}

fn filtration_by_global_closure(g: &OrderedGraph, t: EdgeSet) -> Result<Filtration> {
    let acts = check_tree(g, t)?;
    let e = g.edges();
    let fc = closure_with(g, t, &acts, acts.external)?;
    let fc2 = e - closure_with(g, t, &acts, acts.internal)?;
    if fc != fc2 {
        return Err(Error::Invariant(format!(
            "acl(Ext) = {fc:?} but E \\ acl(Int) = {fc2:?}"
        )));
    }
    let a: Vec<EdgeId> = acts.internal.iter().collect();
    let mut chain_acyclic = Vec::new();
    for k in 0..a.len() {
        let rest: EdgeSet = a[k..].iter().copied().collect();
        chain_acyclic.push(e - closure_with(g, t, &acts, rest)?);
    }
    chain_acyclic.push(e);
    let a: Vec<EdgeId> = acts.external.iter().collect();
    let mut chain_cyclic = Vec::new();
    for k in 0..a.len() {
        let rest: EdgeSet = a[k..].iter().copied().collect();
        chain_cyclic.push(closure_with(g, t, &acts, rest)?);
    }
    chain_cyclic.push(EdgeSet::EMPTY);
    chain_cyclic.reverse();
    if chain_acyclic[0] != fc || *chain_cyclic.last().unwrap() != fc {
        return Err(Error::Invariant("closure chains do not meet at F_c".into()));
    }
    Ok(Filtration {
        chain_cyclic,
        chain_acyclic,
    })
}

fn filtration_by_inductive_closure(g: &OrderedGraph, t: EdgeSet) -> Result<Filtration> {
    let mut cur = g.clone();
    let mut tc = t;
    let mut parts = Vec::new();
    while !cur.edges().is_empty() {
        let acts = check_tree(&cur, tc)?;
        let (a, kind) = match (acts.external.max_edge(), acts.internal.max_edge()) {
            (Some(a), _) => (a, PartKind::Cyclic),
            (None, Some(a)) => (a, PartKind::Acyclic),
            (None, None) => {
                return Err(Error::Invariant("nonempty minor without active edges".into()));
            }
        };
        let part = closure_with(&cur, tc, &acts, EdgeSet::singleton(a))?;
        parts.push((part, kind));
        cur = match kind {
            PartKind::Cyclic => cur.contract(part)?,
            PartKind::Acyclic => cur.delete(part)?,
        };
        tc = tc - part;
    }
    Ok(Filtration::from_partition(&ActivePartition::new(parts)?))
}

/// The active filtration of a spanning tree, computed by the single pass,
/// by global closures and by inductive closures; the three must agree.
/// Each induced minor is checked to carry a uniactive tree.
pub fn tree_active_filtration(g: &OrderedGraph, t: EdgeSet) -> Result<Filtration> {
    let single = filtration_by_single_pass(g, t)?;
    let global = filtration_by_global_closure(g, t)?;
    let inductive = filtration_by_inductive_closure(g, t)?;
    if single != global || single != inductive {
        return Err(Error::Invariant(format!(
            "tree filtration routes disagree: {single} / {global} / {inductive}"
        )));
    }
    for (hi, lo, kind) in single.layers() {
        let m = g.minor(hi, lo)?;
        let acts = tree_activities(&m, t & m.edges())?;
        let want = match kind {
            PartKind::Acyclic => (1, 0),
            PartKind::Cyclic => (0, 1),
        };
        if (acts.internal.len(), acts.external.len()) != want {
            return Err(Error::Invariant(format!(
                "tree is not uniactive on layer {:?}",
                hi - lo
            )));
        }
    }
    Ok(single)
}

/// Which minor carries the image when the greatest edge is removed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Choice {
    /// The image is `α(Ğ \ ω)`.
    Delete,
    /// The image is `α(Ğ / ω) ∪ {ω}`.
    Contract,
}

type Key = (u64, u64, u64);

/// Memoized deletion/contraction recursions on the minors of one graph.
///
/// Building images for many orientations of the same graph through a
/// single engine reuses the images of shared minors.
pub struct DeletionContraction {
    root: OrderedGraph,
    canonical: HashMap<Key, EdgeSet>,
    uniactive: HashMap<Key, EdgeSet>,
    refined: HashMap<(Key, u64), EdgeSet>,
}

fn key(d: &Digraph) -> Key {
    let g = d.graph();
    (g.contracted().bits(), g.edges().bits(), d.reorientation().bits())
}

impl DeletionContraction {
    pub fn new(g: &OrderedGraph) -> DeletionContraction {
        DeletionContraction {
            root: g.ambient(),
            canonical: HashMap::new(),
            uniactive: HashMap::new(),
            refined: HashMap::new(),
        }
    }

    fn check(&self, d: &Digraph) -> Result<()> {
        if d.graph().ambient() == self.root {
            Ok(())
        } else {
            Err(Error::Domain("digraph is not a minor of the engine's graph".into()))
        }
    }

    /// The fully optimal tree of a bipolar (or cyclic-bipolar) digraph by
    /// recursion on the greatest edge, with both dual sign tests.
    pub fn alpha_uniactive(&mut self, d: &Digraph) -> Result<EdgeSet> {
        self.check(d)?;
        self.uniactive_rec(d)
    }

    fn uniactive_rec(&mut self, d: &Digraph) -> Result<EdgeSet> {
        if let Some(&t) = self.uniactive.get(&key(d)) {
            return Ok(t);
        }
        let t = self.uniactive_step(d)?;
        self.uniactive.insert(key(d), t);
        Ok(t)
    }

    fn uniactive_step(&mut self, d: &Digraph) -> Result<EdgeSet> {
        let cyclic = uniactive_kind(d)?;
        let g = d.graph();
        let mut it = g.edges().iter();
        let p = it.next().unwrap();
        if g.edge_count() == 1 {
            return Ok(if cyclic { EdgeSet::EMPTY } else { EdgeSet::singleton(p) });
        }
        if cyclic {
            let p2 = it.next().unwrap();
            let t = self.uniactive_rec(&d.reoriented(EdgeSet::singleton(p)))?;
            return Ok(t.without(p).with(p2));
        }
        let w = g.edges().max_edge().unwrap();
        let ws = EdgeSet::singleton(w);
        let del = d.delete(ws)?;
        let con = d.contract(ws)?;
        let del_ok = del.is_bipolar(p)?;
        let con_ok = con.is_bipolar(p)?;
        match (del_ok, con_ok) {
            (true, false) => self.uniactive_rec(&del),
            (false, true) => Ok(self.uniactive_rec(&con)?.with(w)),
            (false, false) => Err(Error::Invariant(
                "neither minor at the greatest edge is bipolar".into(),
            )),
            (true, true) => {
                let t1 = self.uniactive_rec(&del)?;
                let t2 = self.uniactive_rec(&con)?;
                let c = g.fundamental_cycle(t1, w)?;
                let e = c.support().min_edge().unwrap();
                let by_cycle = if opposite_in(d, &c, e, w) { t1 } else { t2.with(w) };
                let dd = g.fundamental_cocycle(t2.with(w), w)?;
                let e = dd.support().min_edge().unwrap();
                let by_cocycle = if opposite_in(d, &dd, e, w) { t2.with(w) } else { t1 };
                if by_cycle != by_cocycle {
                    return Err(Error::Invariant(format!(
                        "dual sign tests disagree: {by_cycle:?} vs {by_cocycle:?}"
                    )));
                }
                Ok(by_cycle)
            }
        }
    }

    /// The active spanning tree by recursion on the greatest edge.
    pub fn alpha(&mut self, d: &Digraph) -> Result<EdgeSet> {
        self.check(d)?;
        self.canonical_rec(d)
    }

    fn canonical_rec(&mut self, d: &Digraph) -> Result<EdgeSet> {
        if let Some(&t) = self.canonical.get(&key(d)) {
            return Ok(t);
        }
        let g = d.graph();
        let t = match g.edges().max_edge() {
            None => EdgeSet::EMPTY,
            Some(w) => {
                let ws = EdgeSet::singleton(w);
                if g.is_isthmus(w) {
                    self.canonical_rec(&d.contract(ws)?)?.with(w)
                } else if g.is_loop(w) {
                    self.canonical_rec(&d.delete(ws)?)?
                } else {
                    match self.choose(d)? {
                        Choice::Delete => self.canonical_rec(&d.delete(ws)?)?,
                        Choice::Contract => self.canonical_rec(&d.contract(ws)?)?.with(w),
                    }
                }
            }
        };
        self.canonical.insert(key(d), t);
        Ok(t)
    }

    /// The minor selected for `d` at its greatest edge, which must be
    /// neither a loop nor an isthmus. Compares active partitions first and
    /// falls back on both dual sign tests inside the active minor holding
    /// the greatest edge.
    pub fn choose(&mut self, d: &Digraph) -> Result<Choice> {
        self.check(d)?;
        let g = d.graph();
        let w = g
            .edges()
            .max_edge()
            .ok_or_else(|| Error::Precondition("empty digraph".into()))?;
        if g.is_loop(w) || g.is_isthmus(w) {
            return Err(Error::Precondition(format!("edge {w} is a loop or an isthmus")));
        }
        let ws = EdgeSet::singleton(w);
        let del = d.delete(ws)?;
        let con = d.contract(ws)?;
        let p_del = active_partition(&del)?;
        let p_con = active_partition(&con)?;
        if p_del != p_con {
            let removed = active_partition(d)?.remove_edge(w);
            return if removed == p_del {
                Ok(Choice::Delete)
            } else if removed == p_con {
                Ok(Choice::Contract)
            } else {
                Err(Error::Invariant(format!(
                    "removing {w} from the active partition matches neither minor"
                )))
            };
        }
        let gw = active_minors(d)?
            .into_iter()
            .find(|m| m.digraph.edges().contains(w))
            .ok_or_else(|| Error::Invariant(format!("no active minor holds {w}")))?
            .digraph;
        let ew = gw.edges();
        let mg = gw.graph();
        let t1 = self.canonical_rec(&del)? & ew;
        let t2 = self.canonical_rec(&con)? & ew;
        let c = mg.fundamental_cycle(t1, w)?;
        let e = c.support().min_edge().unwrap();
        let by_cycle = if opposite_in(&gw, &c, e, w) {
            Choice::Delete
        } else {
            Choice::Contract
        };
        let dd = mg.fundamental_cocycle(t2.with(w), w)?;
        let e = dd.support().min_edge().unwrap();
        let by_cocycle = if opposite_in(&gw, &dd, e, w) {
            Choice::Contract
        } else {
            Choice::Delete
        };
        if by_cycle != by_cocycle {
            return Err(Error::Invariant(format!(
                "dual sign tests disagree at edge {w}"
            )));
        }
        Ok(by_cycle)
    }

    /// The refined image of `a` with respect to `reference`, by recursion
    /// on the greatest edge.
    pub fn alpha_refined(&mut self, reference: &Digraph, a: EdgeSet) -> Result<EdgeSet> {
        self.check(reference)?;
        if !a.is_subset(reference.edges()) {
            return Err(Error::InvalidSubset {
                set: a,
                live: reference.edges(),
            });
        }
        self.refined_rec(reference, a)
    }

    fn refined_rec(&mut self, r: &Digraph, a: EdgeSet) -> Result<EdgeSet> {
        let k = (key(r), a.bits());
        if let Some(&x) = self.refined.get(&k) {
            return Ok(x);
        }
        let g = r.graph();
        let x = match g.edges().max_edge() {
            None => EdgeSet::EMPTY,
            Some(w) => {
                let ws = EdgeSet::singleton(w);
                let rest = a.without(w);
                if g.is_isthmus(w) {
                    let x = self.refined_rec(&r.contract(ws)?, rest)?;
                    if a.contains(w) {
                        x
                    } else {
                        x.with(w)
                    }
                } else if g.is_loop(w) {
                    let x = self.refined_rec(&r.delete(ws)?, rest)?;
                    if a.contains(w) {
                        x.with(w)
                    } else {
                        x
                    }
                } else {
                    match self.choose(&r.reoriented(a))? {
                        Choice::Delete => self.refined_rec(&r.delete(ws)?, rest)?,
                        Choice::Contract => self.refined_rec(&r.contract(ws)?, rest)?.with(w),
                    }
                }
            }
        };
        self.refined.insert(k, x);
        Ok(x)
    }
}

/// [`DeletionContraction::alpha_uniactive`] with a fresh engine.
pub fn alpha_dc_uniactive(d: &Digraph) -> Result<EdgeSet> {
    DeletionContraction::new(d.graph()).alpha_uniactive(d)
}

/// [`DeletionContraction::alpha`] with a fresh engine.
pub fn alpha_dc(d: &Digraph) -> Result<EdgeSet> {
    DeletionContraction::new(d.graph()).alpha(d)
}

/// [`DeletionContraction::alpha_refined`] with a fresh engine.
pub fn alpha_dc_refined(reference: &Digraph, a: EdgeSet) -> Result<EdgeSet> {
    DeletionContraction::new(reference.graph()).alpha_refined(reference, a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> OrderedGraph {
        OrderedGraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    fn k4() -> OrderedGraph {
        OrderedGraph::new(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn single_edges() {
        let bar = Digraph::new(OrderedGraph::new(2, &[(0, 1)]).unwrap());
        assert_eq!(alpha_uniactive(&bar).unwrap(), EdgeSet::of(&[1]));
        assert_eq!(alpha_dc_uniactive(&bar).unwrap(), EdgeSet::of(&[1]));
        let lp = Digraph::new(OrderedGraph::new(1, &[(0, 0)]).unwrap());
        assert_eq!(alpha_uniactive(&lp).unwrap(), EdgeSet::EMPTY);
        assert_eq!(alpha(&lp).unwrap(), EdgeSet::EMPTY);
    }

    #[test]
    fn not_bipolar_is_rejected() {
        let d = Digraph::new(k3());
        assert!(matches!(alpha_uniactive(&d), Err(Error::Precondition(_))));
    }

    #[test]
    fn triangle_bipolar() {
        // Source 0, sink 1.
        let d = Digraph::new(k3()).reoriented(EdgeSet::of(&[3]));
        let t = alpha_uniactive(&d).unwrap();
        assert_eq!(t, EdgeSet::of(&[1, 3]));
        assert_eq!(alpha_dc_uniactive(&d).unwrap(), t);
        assert_eq!(alpha(&d).unwrap(), t);
        assert_eq!(alpha(&d.opposite()).unwrap(), t);
        let pair = alpha_uniactive_inverse(d.graph(), t).unwrap();
        assert!(pair.contains(d.reorientation()));
    }

    #[test]
    fn canonical_routes_agree_on_k4() {
        let g = k4();
        let mut engine = DeletionContraction::new(&g);
        let reference = Digraph::new(g.clone());
        for a in g.edges().subsets() {
            let d = reference.reoriented(a);
            let t = alpha(&d).unwrap();
            assert_eq!(engine.alpha(&d).unwrap(), t, "{a:?}");
            let acts = d.activity_sets().unwrap();
            let ta = tree_activities(&g, t).unwrap();
            assert_eq!((ta.internal, ta.external), (acts.dual_active, acts.active));
        }
    }

    #[test]
    fn refined_is_a_bijection_on_k3() {
        let g = k3();
        let r = Digraph::new(g.clone());
        let mut images: Vec<EdgeSet> = g
            .edges()
            .subsets()
            .map(|a| alpha_refined(&r, a).unwrap())
            .collect();
        for a in g.edges().subsets() {
            assert_eq!(alpha_dc_refined(&r, a).unwrap(), alpha_refined(&r, a).unwrap());
        }
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 8);
    }

    #[test]
    fn single_pass_on_k4() {
        let g = k4();
        let r = Digraph::new(g.clone());
        for t in g.spanning_trees().unwrap() {
            let data = tree_active_data(&g, t, None).unwrap();
            for &a in &data.preimages {
                assert_eq!(alpha(&r.reoriented(a)).unwrap(), t);
            }
            let f = tree_active_filtration(&g, t).unwrap();
            assert_eq!(f.parts(), data.partition);
            let (lo, hi) = crate::activity::interval_of(&g, t).unwrap();
            for x in (hi - lo).subsets() {
                let x = lo | x;
                let d = tree_active_data(&g, t, Some((&r, x))).unwrap();
                let a = d.refined_preimage.unwrap();
                assert_eq!(alpha_refined(&r, a).unwrap(), x);
            }
        }
    }

    #[test]
    fn closure_edge_cases() {
        let g = k4();
        let t = EdgeSet::of(&[4, 5, 6]);
        let acts = tree_activities(&g, t).unwrap();
        assert_eq!(active_closure(&g, t, EdgeSet::EMPTY).unwrap(), EdgeSet::EMPTY);
        assert_eq!(active_closure(&g, t, acts.external).unwrap(), g.edges());
        let mixed = EdgeSet::of(&[1, 4]);
        assert!(active_closure(&g, EdgeSet::of(&[2, 3, 4]), mixed).is_err());
    }
}
