//! Active filtrations and partitions, active minors, activity classes, and
//! enumeration of connected filtrations.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, OrderedGraph};
use crate::orientation::Digraph;
use crate::tutte;

/// Whether a part lies inside the cyclic flat.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum PartKind {
    Cyclic,
    Acyclic,
}

/// One part of an active partition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Part {
    pub min_edge: EdgeId,
    pub edges: EdgeSet,
    pub kind: PartKind,
}

/// A partition of the edges into parts, each tagged cyclic or acyclic.
/// Parts are sorted by their smallest edge.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ActivePartition {
    pub parts: Vec<Part>,
}

impl ActivePartition {
    /// Builds a partition from tagged parts; sorts them.
    pub fn new(parts: impl IntoIterator<Item = (EdgeSet, PartKind)>) -> Result<ActivePartition> {
        let mut out = Vec::new();
        for (edges, kind) in parts {
            let min_edge = edges
                .min_edge()
                .ok_or_else(|| Error::Domain("empty part".into()))?;
            out.push(Part {
                min_edge,
                edges,
                kind,
            });
        }
        out.sort_by_key(|p| p.min_edge);
        Ok(ActivePartition { parts: out })
    }

    /// Union of the cyclic parts.
    pub fn cyclic_flat(&self) -> EdgeSet {
        self.union_of(PartKind::Cyclic)
    }

    pub fn union_of(&self, kind: PartKind) -> EdgeSet {
        self.parts
            .iter()
            .filter(|p| p.kind == kind)
            .fold(EdgeSet::EMPTY, |acc, p| acc | p.edges)
    }

    pub fn edges(&self) -> EdgeSet {
        self.parts.iter().fold(EdgeSet::EMPTY, |acc, p| acc | p.edges)
    }

    /// Smallest edges of the parts of the given kind.
    pub fn minima(&self, kind: PartKind) -> EdgeSet {
        self.parts
            .iter()
            .filter(|p| p.kind == kind)
            .map(|p| p.min_edge)
            .collect()
    }

    /// The part containing `e`.
    pub fn part_of(&self, e: EdgeId) -> Option<&Part> {
        self.parts.iter().find(|p| p.edges.contains(e))
    }

    /// Removes `e` from its part, dropping the part if it becomes empty.
    pub fn remove_edge(&self, e: EdgeId) -> ActivePartition {
        let parts = self
            .parts
            .iter()
            .filter_map(|p| {
                let edges = p.edges.without(e);
                edges.min_edge().map(|min_edge| Part {
                    min_edge,
                    edges,
                    kind: p.kind,
                })
            })
            .collect::<Vec<_>>();
        let mut parts = parts;
        parts.sort_by_key(|p| p.min_edge);
        ActivePartition { parts }
    }
}

/// Parts joined by `+`, in increasing order of their smallest edge.
impl fmt::Display for ActivePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{}", p.edges)?;
        }
        Ok(())
    }
}

/// A filtration `∅ = F'_ε ⊂ … ⊂ F'_0 = F_c = F_0 ⊂ … ⊂ F_ι = E`.
///
/// Both chains are stored in increasing order and share their common
/// member `F_c`: `chain_cyclic` runs from `∅` to `F_c`, `chain_acyclic`
/// from `F_c` to `E`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Filtration {
    pub chain_cyclic: Vec<EdgeSet>,
    pub chain_acyclic: Vec<EdgeSet>,
}

impl Filtration {
    /// The cyclic flat `F_c`.
    pub fn cyclic_flat(&self) -> EdgeSet {
        *self.chain_acyclic.first().expect("nonempty chain")
    }

    /// Number of acyclic layers.
    pub fn iota(&self) -> usize {
        self.chain_acyclic.len() - 1
    }

    /// Number of cyclic layers.
    pub fn epsilon(&self) -> usize {
        self.chain_cyclic.len() - 1
    }

    /// Layers of the chain from the bottom up, with their kind. The layer
    /// `F_k \ F_{k-1}` is the edge set of the minor `G(F_k)/F_{k-1}`.
    pub fn layers(&self) -> Vec<(EdgeSet, EdgeSet, PartKind)> {
        let cyc = self
            .chain_cyclic
            .windows(2)
            .map(|w| (w[1], w[0], PartKind::Cyclic));
        let acyc = self
            .chain_acyclic
            .windows(2)
            .map(|w| (w[1], w[0], PartKind::Acyclic));
        cyc.chain(acyc).collect()
    }

    /// The active partition: successive differences, tagged.
    pub fn parts(&self) -> ActivePartition {
        ActivePartition::new(self.layers().into_iter().map(|(hi, lo, k)| (hi - lo, k)))
            .expect("strict chain has nonempty layers")
    }

    /// Minors `G(F_k)/F_{k-1}` induced by the layers, bottom up.
    pub fn minors(&self, g: &OrderedGraph) -> Result<Vec<(OrderedGraph, PartKind)>> {
        self.layers()
            .into_iter()
            .map(|(hi, lo, k)| Ok((g.minor(hi, lo)?, k)))
            .collect()
    }

    /// Rebuilds the chain from a tagged partition. Acyclic parts are stacked
    /// on `F_c` by increasing minimum; cyclic parts are peeled off `F_c`
    /// by increasing minimum.
    pub fn from_partition(p: &ActivePartition) -> Filtration {
        let fc = p.cyclic_flat();
        let mut chain_acyclic = vec![fc];
        let mut cur = fc;
        for part in p.parts.iter().filter(|q| q.kind == PartKind::Acyclic) {
            cur |= part.edges;
            chain_acyclic.push(cur);
        }
        let mut chain_cyclic = vec![fc];
        let mut cur = fc;
        for part in p.parts.iter().filter(|q| q.kind == PartKind::Cyclic) {
            cur = cur - part.edges;
            chain_cyclic.push(cur);
        }
        chain_cyclic.reverse();
        Filtration {
            chain_cyclic,
            chain_acyclic,
        }
    }
}

/// Sets of the chain separated by `⊂`, with the cyclic flat in brackets:
/// `[∅] ⊂ 1 ⊂ 123`.
impl fmt::Display for Filtration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fc = self.cyclic_flat();
        let sets = self
            .chain_cyclic
            .iter()
            .chain(self.chain_acyclic.iter().skip(1));
        for (i, s) in sets.enumerate() {
            if i > 0 {
                f.write_str(" ⊂ ")?;
            }
            if i == self.epsilon() {
                debug_assert_eq!(*s, fc);
                write!(f, "[{s}]")?;
            } else {
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

/// The active filtration of `d`, built from unions of directed cycles and
/// cocycles filtered by their smallest edge.
pub fn active_filtration(d: &Digraph) -> Result<Filtration> {
    let cycles = d.directed_cycles()?;
    let cocycles = d.directed_cocycles()?;
    let e = d.edges();
    let union = |sets: &[EdgeSet], above: Option<EdgeId>| {
        sets.iter()
            .filter(|s| above.map_or(true, |a| s.min_edge().is_some_and(|m| m >= a)))
            .fold(EdgeSet::EMPTY, |acc, s| acc | *s)
    };
    let dual_active: EdgeSet = cocycles.iter().filter_map(|s| s.min_edge()).collect();
    let active: EdgeSet = cycles.iter().filter_map(|s| s.min_edge()).collect();
    let fc = union(&cycles, None);

    let a: Vec<EdgeId> = dual_active.iter().collect();
    let mut chain_acyclic: Vec<EdgeSet> = (0..a.len())
        .map(|k| e - union(&cocycles, Some(a[k])))
        .collect();
    chain_acyclic.push(e);

    let a: Vec<EdgeId> = active.iter().collect();
    let mut chain_cyclic: Vec<EdgeSet> = (0..a.len()).map(|k| union(&cycles, Some(a[k]))).collect();
    chain_cyclic.push(EdgeSet::EMPTY);
    chain_cyclic.reverse();

    if chain_acyclic[0] != fc || *chain_cyclic.last().expect("nonempty") != fc {
        return Err(Error::Invariant(format!(
            "directed cycles and cocycles do not split the edges: F_c = {fc:?}"
        )));
    }
    Ok(Filtration {
        chain_cyclic,
        chain_acyclic,
    })
}

/// The active partition of `d`.
pub fn active_partition(d: &Digraph) -> Result<ActivePartition> {
    Ok(active_filtration(d)?.parts())
}

/// A minor induced by the active filtration, with its orientation.
#[derive(Clone, Debug)]
pub struct ActiveMinor {
    pub digraph: Digraph,
    pub kind: PartKind,
}

/// The bipolar and cyclic-bipolar minors of the active filtration, bottom up.
pub fn active_minors(d: &Digraph) -> Result<Vec<ActiveMinor>> {
    minors_of(d, &active_filtration(d)?)
}

/// Minors of `d` induced by the layers of `f`, each checked bipolar
/// (acyclic layer) or cyclic-bipolar (cyclic layer) with respect to its
/// smallest edge.
pub(crate) fn minors_of(d: &Digraph, f: &Filtration) -> Result<Vec<ActiveMinor>> {
    let mut out = Vec::new();
    for (hi, lo, kind) in f.layers() {
        let m = d.minor(hi, lo)?;
        let p = (hi - lo).min_edge().expect("nonempty layer");
        let ok = match kind {
            PartKind::Acyclic => m.is_bipolar(p)?,
            PartKind::Cyclic => m.is_cyclic_bipolar(p)?,
        };
        if !ok {
            return Err(Error::Invariant(format!(
                "minor on {:?} is not {} w.r.t. {p}",
                hi - lo,
                if kind == PartKind::Acyclic { "bipolar" } else { "cyclic-bipolar" }
            )));
        }
        out.push(ActiveMinor { digraph: m, kind });
    }
    Ok(out)
}

/// Strict nesting, shared `F_c`, ends `∅` and `E`, increasing layer minima.
pub fn is_filtration(g: &OrderedGraph, f: &Filtration) -> bool {
    let (cyc, acyc) = (&f.chain_cyclic, &f.chain_acyclic);
    if cyc.is_empty() || acyc.is_empty() {
        return false;
    }
    if cyc[0] != EdgeSet::EMPTY || *acyc.last().unwrap() != g.edges() || *cyc.last().unwrap() != acyc[0] {
        return false;
    }
    let strict = |c: &[EdgeSet]| c.windows(2).all(|w| w[0].is_subset(w[1]) && w[0] != w[1]);
    if !strict(cyc) || !strict(acyc) {
        return false;
    }
    let increasing = |mins: Vec<EdgeId>| mins.windows(2).all(|w| w[0] < w[1]);
    let acyc_mins = acyc.windows(2).map(|w| (w[1] - w[0]).min_edge().unwrap()).collect();
    // Cyclic layers F'_{k-1} \ F'_k, k = 1..ε, run from the top down.
    let cyc_mins = cyc.windows(2).rev().map(|w| (w[1] - w[0]).min_edge().unwrap()).collect();
    increasing(acyc_mins) && increasing(cyc_mins)
}

fn layer_is_connected(m: &OrderedGraph, kind: PartKind) -> bool {
    if m.edge_count() == 1 {
        let e = m.edges().min_edge().unwrap();
        match kind {
            PartKind::Acyclic => !m.is_loop(e),
            PartKind::Cyclic => m.is_loop(e),
        }
    } else {
        m.is_2connected_loopless()
    }
}

/// Every induced minor is 2-connected loopless with at least two edges, or
/// a single isthmus (acyclic layer) or a single loop (cyclic layer).
pub fn connected_by_structure(g: &OrderedGraph, f: &Filtration) -> Result<bool> {
    Ok(f.minors(g)?.iter().all(|(m, k)| layer_is_connected(m, *k)))
}

/// Product of `β` over acyclic minors and `β*` over cyclic minors.
pub fn beta_product(g: &OrderedGraph, f: &Filtration) -> Result<u64> {
    let mut prod = 1u64;
    for (m, k) in f.minors(g)? {
        prod *= match k {
            PartKind::Acyclic => tutte::beta(&m)?,
            PartKind::Cyclic => tutte::beta_star(&m)?,
        };
    }
    Ok(prod)
}

/// A filtration whose induced minors are all connected. Checked both
/// structurally and through the product of `β` invariants; the two must agree.
pub fn is_connected_filtration(g: &OrderedGraph, f: &Filtration) -> Result<bool> {
    if !is_filtration(g, f) {
        return Ok(false);
    }
    let by_structure = connected_by_structure(g, f)?;
    let by_beta = beta_product(g, f)? != 0;
    if by_structure != by_beta {
        return Err(Error::Invariant(format!(
            "connectivity of {f} disagrees: structure {by_structure}, beta {by_beta}"
        )));
    }
    Ok(by_structure)
}

struct Enumerator<'a> {
    g: &'a OrderedGraph,
    acyclic: HashMap<EdgeSet, Vec<Vec<EdgeSet>>>,
    cyclic: HashMap<EdgeSet, Vec<Vec<EdgeSet>>>,
}

impl Enumerator<'_> {
    /// Chains `F = F_0 ⊂ … ⊂ F_ι = E` with connected acyclic layers.
    fn acyclic_from(&mut self, f: EdgeSet) -> Result<Vec<Vec<EdgeSet>>> {
        if let Some(v) = self.acyclic.get(&f) {
            return Ok(v.clone());
        }
        let e = self.g.edges();
        let mut out = Vec::new();
        if f == e {
            out.push(vec![e]);
        } else {
            let rest = e - f;
            let m = rest.min_edge().unwrap();
            for s in rest.without(m).subsets() {
                let next = f | s.with(m);
                if !layer_is_connected(&self.g.minor(next, f)?, PartKind::Acyclic) {
                    continue;
                }
                for tail in self.acyclic_from(next)? {
                    let mut chain = vec![f];
                    chain.extend(tail);
                    out.push(chain);
                }
            }
        }
        self.acyclic.insert(f, out.clone());
        Ok(out)
    }

    /// Chains `∅ = F'_ε ⊂ … ⊂ F'_0 = F` with connected cyclic layers.
    fn cyclic_to(&mut self, f: EdgeSet) -> Result<Vec<Vec<EdgeSet>>> {
        if let Some(v) = self.cyclic.get(&f) {
            return Ok(v.clone());
        }
        let mut out = Vec::new();
        if f.is_empty() {
            out.push(vec![f]);
        } else {
            let m = f.min_edge().unwrap();
            for s in f.without(m).subsets() {
                let inner = f - s.with(m);
                if !layer_is_connected(&self.g.minor(f, inner)?, PartKind::Cyclic) {
                    continue;
                }
                for mut chain in self.cyclic_to(inner)? {
                    chain.push(f);
                    out.push(chain);
                }
            }
        }
        self.cyclic.insert(f, out.clone());
        Ok(out)
    }
}

/// Every connected filtration of `g`, each once, sorted.
pub fn enumerate_connected_filtrations(g: &OrderedGraph) -> Result<Vec<Filtration>> {
    g.check_orientations("filtration enumeration")?;
    let mut en = Enumerator {
        g,
        acyclic: HashMap::new(),
        cyclic: HashMap::new(),
    };
    let mut out = Vec::new();
    for fc in g.edges().subsets() {
        let cyc = en.cyclic_to(fc)?;
        if cyc.is_empty() {
            continue;
        }
        let acyc = en.acyclic_from(fc)?;
        for c in &cyc {
            for a in &acyc {
                out.push(Filtration {
                    chain_cyclic: c.clone(),
                    chain_acyclic: a.clone(),
                });
            }
        }
    }
    out.sort();
    if out.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Invariant("duplicate filtration".into()));
    }
    Ok(out)
}

/// An activity class: the orientations obtained from one of them by
/// reversing unions of parts of its active partition.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ActivityClass {
    /// The member that is active-fixed and dual-active-fixed with respect to
    /// the stored orientation, as a reorientation set.
    pub representative: EdgeSet,
    pub partition: ActivePartition,
}

impl ActivityClass {
    /// All `2^(number of parts)` members as reorientation sets, sorted.
    pub fn members(&self) -> Vec<EdgeSet> {
        let n = self.partition.parts.len();
        let mut out: Vec<EdgeSet> = (0u64..(1 << n))
            .map(|mask| {
                self.partition
                    .parts
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(self.representative, |acc, (_, p)| acc ^ p.edges)
            })
            .collect();
        out.sort();
        out
    }

    pub fn len(&self) -> usize {
        1 << self.partition.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, a: EdgeSet) -> bool {
        let diff = a ^ self.representative;
        let mut rest = diff;
        for p in &self.partition.parts {
            if p.edges.is_subset(diff) {
                rest = rest - p.edges;
            } else if !p.edges.is_disjoint(diff) {
                return false;
            }
        }
        rest.is_empty()
    }
}

/// The activity class of `d`, members given relative to the stored orientation.
pub fn activity_class(d: &Digraph) -> Result<ActivityClass> {
    let partition = active_partition(d)?;
    let members = ActivityClass {
        representative: d.reorientation(),
        partition,
    };
    let representative = class_representative(&Digraph::new(d.graph().clone()), &members)?;
    Ok(ActivityClass {
        representative,
        partition: members.partition,
    })
}

/// The unique member `A` of `class` with `O(-_A Ğ) ∩ A = O*(-_A Ğ) ∩ A = ∅`,
/// where `Ğ` is `reference`. Returned relative to `reference`.
pub fn class_representative(reference: &Digraph, class: &ActivityClass) -> Result<EdgeSet> {
    let mut found = None;
    for m in class.members() {
        let a = m ^ reference.reorientation();
        let acts = reference.reoriented(a).activity_sets()?;
        if acts.active.is_disjoint(a) && acts.dual_active.is_disjoint(a) {
            if found.is_some() {
                return Err(Error::Invariant("two fixed members in one class".into()));
            }
            found = Some(a);
        }
    }
    found.ok_or_else(|| Error::Invariant("no fixed member in class".into()))
}
