//! Ordered multigraphs and their minors.
//!
//! Edges are identified by their rank in the linear order, starting at 1.
//! A minor `G(L)/C` is stored as a pair of edge sets over the ambient graph:
//! the contracted edges `C` and the live edges `L`. Vertices of the minor are
//! the classes of ambient vertices joined by contracted edges. Cycles,
//! cocycles and spanning trees of a minor are therefore subsets of the
//! ambient edge set, and minors of minors compose without renaming.
//!
//! Cycles and cocycles are inclusion-minimal. On a minor that happens to be
//! disconnected they keep their matroid meaning, and "spanning tree" reads
//! as maximal spanning forest.

use std::collections::HashMap;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, BitXorAssign, Not, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Largest number of edges a graph may have.
pub const MAX_EDGES: usize = 64;

/// An edge, named by its 1-based rank in the linear order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(u8);

impl EdgeId {
    /// Edge of the given rank, if `1 <= rank <= 64`.
    pub fn new(rank: usize) -> Option<EdgeId> {
        (1..=MAX_EDGES).contains(&rank).then(|| EdgeId(rank as u8))
    }

    pub fn rank(self) -> usize {
        self.0 as usize
    }

    fn bit(self) -> u64 {
        1u64 << (self.0 - 1)
    }

    fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Debug for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A set of edges, stored as a bitmask.
///
/// Sets compare lexicographically by their sorted members, so sorting a list
/// of sets gives the order used in every listing of this crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EdgeSet(u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn from_bits(bits: u64) -> EdgeSet {
        EdgeSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// The edges `1..=n`.
    pub fn full(n: usize) -> EdgeSet {
        assert!(n <= MAX_EDGES, "at most {MAX_EDGES} edges");
        if n == MAX_EDGES {
            EdgeSet(u64::MAX)
        } else {
            EdgeSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: EdgeId) -> EdgeSet {
        EdgeSet(e.bit())
    }

    /// Set of the given ranks.
    pub fn from_ranks<I: IntoIterator<Item = usize>>(ranks: I) -> Result<EdgeSet> {
        let mut s = EdgeSet::EMPTY;
        for r in ranks {
            s.insert(EdgeId::new(r).ok_or(Error::BadRank(r))?);
        }
        Ok(s)
    }

    /// Set of the given ranks. Panics on a rank outside `1..=64`.
    pub fn of(ranks: &[usize]) -> EdgeSet {
        EdgeSet::from_ranks(ranks.iter().copied()).expect("edge ranks are 1..=64")
    }

    pub fn contains(self, e: EdgeId) -> bool {
        self.0 & e.bit() != 0
    }

    pub fn insert(&mut self, e: EdgeId) {
        self.0 |= e.bit();
    }

    pub fn remove(&mut self, e: EdgeId) {
        self.0 &= !e.bit();
    }

    pub fn with(self, e: EdgeId) -> EdgeSet {
        EdgeSet(self.0 | e.bit())
    }

    pub fn without(self, e: EdgeId) -> EdgeSet {
        EdgeSet(self.0 & !e.bit())
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min_edge(self) -> Option<EdgeId> {
        (self.0 != 0).then(|| EdgeId(self.0.trailing_zeros() as u8 + 1))
    }

    pub fn max_edge(self) -> Option<EdgeId> {
        (self.0 != 0).then(|| EdgeId(64 - self.0.leading_zeros() as u8))
    }

    pub fn is_subset(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: EdgeSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> EdgeIter {
        EdgeIter(self.0)
    }

    /// Every subset of `self`, the empty set included.
    pub fn subsets(self) -> Subsets {
        Subsets {
            universe: self.0,
            next: Some(0),
        }
    }

    /// Edges of `self` smaller than `e`.
    pub fn below(self, e: EdgeId) -> EdgeSet {
        EdgeSet(self.0 & (e.bit() - 1))
    }

    /// Edges of `self` greater than `e`.
    pub fn above(self, e: EdgeId) -> EdgeSet {
        EdgeSet(self.0 & !((e.bit() << 1).wrapping_sub(1)))
    }

    /// Ranks in increasing order.
    pub fn ranks(self) -> Vec<usize> {
        self.iter().map(EdgeId::rank).collect()
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Compact form: `∅`, digits run together when every rank is below 10
/// (`134`), braces otherwise (`{2,11}`).
impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.max_edge() {
            None => f.write_str("∅"),
            Some(m) if m.rank() < 10 => {
                for e in self.iter() {
                    write!(f, "{e}")?;
                }
                Ok(())
            }
            Some(_) => write!(f, "{self:?}"),
        }
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        let mut s = EdgeSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl IntoIterator for EdgeSet {
    type Item = EdgeId;
    type IntoIter = EdgeIter;
    fn into_iter(self) -> EdgeIter {
        self.iter()
    }
}

macro_rules! set_op {
    ($tr:ident, $f:ident, $atr:ident, $af:ident, $op:tt) => {
        impl $tr for EdgeSet {
            type Output = EdgeSet;
            fn $f(self, rhs: EdgeSet) -> EdgeSet {
                EdgeSet(self.0 $op rhs.0)
            }
        }
        impl $atr for EdgeSet {
            fn $af(&mut self, rhs: EdgeSet) {
                self.0 = self.0 $op rhs.0;
            }
        }
    };
}

set_op!(BitOr, bitor, BitOrAssign, bitor_assign, |);
set_op!(BitAnd, bitand, BitAndAssign, bitand_assign, &);
set_op!(BitXor, bitxor, BitXorAssign, bitxor_assign, ^);

impl Sub for EdgeSet {
    type Output = EdgeSet;
    fn sub(self, rhs: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & !rhs.0)
    }
}

/// Complement inside the 64-bit universe; intersect with a live set before use.
impl Not for EdgeSet {
    type Output = EdgeSet;
    fn not(self) -> EdgeSet {
        EdgeSet(!self.0)
    }
}

#[derive(Clone, Debug)]
pub struct EdgeIter(u64);

impl Iterator for EdgeIter {
    type Item = EdgeId;
    fn next(&mut self) -> Option<EdgeId> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(EdgeId(tz as u8 + 1))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl DoubleEndedIterator for EdgeIter {
    fn next_back(&mut self) -> Option<EdgeId> {
        if self.0 == 0 {
            return None;
        }
        let top = 63 - self.0.leading_zeros();
        self.0 &= !(1u64 << top);
        Some(EdgeId(top as u8 + 1))
    }
}

impl ExactSizeIterator for EdgeIter {}

/// Iterator over the subsets of a set, in increasing order of bitmask.
#[derive(Clone, Debug)]
pub struct Subsets {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = EdgeSet;
    fn next(&mut self) -> Option<EdgeSet> {
        let cur = self.next?;
        self.next = if cur == self.universe {
            None
        } else {
            Some((cur.wrapping_sub(self.universe)) & self.universe)
        };
        Some(EdgeSet(cur))
    }
}

/// Sign of an edge inside a signed set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// An edge set split into positive and negative edges.
///
/// Signs of cycles and cocycles are taken relative to the stored direction
/// of each edge (its tail and head as given at construction).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct SignedEdgeSet {
    pub positive: EdgeSet,
    pub negative: EdgeSet,
}

impl SignedEdgeSet {
    pub fn support(&self) -> EdgeSet {
        self.positive | self.negative
    }

    pub fn sign(&self, e: EdgeId) -> Option<Sign> {
        if self.positive.contains(e) {
            Some(Sign::Plus)
        } else if self.negative.contains(e) {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    pub fn negated(&self) -> SignedEdgeSet {
        SignedEdgeSet {
            positive: self.negative,
            negative: self.positive,
        }
    }

    /// The signs seen after reversing the edges of `a`.
    pub fn reoriented(&self, a: EdgeSet) -> SignedEdgeSet {
        SignedEdgeSet {
            positive: (self.positive - a) | (self.negative & a),
            negative: (self.negative - a) | (self.positive & a),
        }
    }

    /// All edges share one sign.
    pub fn is_directed(&self) -> bool {
        self.positive.is_empty() || self.negative.is_empty()
    }

    /// The same set, negated if needed so that `e` is positive.
    pub fn with_positive(&self, e: EdgeId) -> SignedEdgeSet {
        if self.negative.contains(e) {
            self.negated()
        } else {
            *self
        }
    }
}

/// Kind of an edge inside its graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum EdgeKind {
    Loop,
    Isthmus,
    Ordinary,
}

/// Enumeration limits.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Limits {
    /// Largest live edge count for subset enumeration of cycles, cocycles
    /// and spanning trees.
    pub max_enum_edges: usize,
    /// Largest live edge count for which all `2^|E|` orientations may be
    /// enumerated.
    pub max_orientation_edges: usize,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            max_enum_edges: 20,
            max_orientation_edges: 16,
        }
    }
}

struct Ambient {
    vertex_count: usize,
    ends: Vec<(usize, usize)>,
    limits: Limits,
    cache: Mutex<HashMap<(u64, u64), Arc<MinorData>>>,
}

/// Lazily filled facts about one minor, shared by all handles on it.
pub(crate) struct MinorData {
    /// Ambient vertex to the representative of its class.
    rep: Vec<usize>,
    /// Representatives touched by a live edge.
    vertices: Vec<usize>,
    rank: usize,
    cycles: OnceLock<Vec<SignedEdgeSet>>,
    cocycles: OnceLock<Vec<SignedEdgeSet>>,
    forests: OnceLock<Vec<EdgeSet>>,
    pub(crate) tree_activities: OnceLock<Vec<(EdgeSet, EdgeSet, EdgeSet)>>,
    pub(crate) tutte: OnceLock<crate::tutte::TuttePoly>,
}

/// An ordered multigraph, possibly a minor of a larger ambient graph.
///
/// Cloning is cheap: the ambient graph and its cache are shared.
#[derive(Clone)]
pub struct OrderedGraph {
    ambient: Arc<Ambient>,
    contracted: EdgeSet,
    live: EdgeSet,
}

impl PartialEq for OrderedGraph {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ambient, &other.ambient)
            || (self.ambient.vertex_count == other.ambient.vertex_count
                && self.ambient.ends == other.ambient.ends))
            && self.contracted == other.contracted
            && self.live == other.live
    }
}

impl Eq for OrderedGraph {}

impl fmt::Debug for OrderedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self
            .live
            .iter()
            .map(|e| (e.rank(), self.endpoints(e)))
            .collect();
        f.debug_struct("OrderedGraph")
            .field("contracted", &self.contracted)
            .field("edges", &edges)
            .finish()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    /// Joins the classes of `a` and `b`; true if they were distinct.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.0[hi] = lo;
        true
    }
}

impl OrderedGraph {
    /// Builds a graph from its edge list. Edge `k` (1-based) is
    /// `edges[k - 1]`, directed from the first vertex to the second; this
    /// direction is the reference orientation. Loops and parallel edges are
    /// allowed. The edges must form a connected graph once isolated
    /// vertices are ignored.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<OrderedGraph> {
        OrderedGraph::with_limits(vertex_count, edges, Limits::default())
    }

    /// As [`OrderedGraph::new`], with explicit enumeration limits.
    pub fn with_limits(
        vertex_count: usize,
        edges: &[(usize, usize)],
        limits: Limits,
    ) -> Result<OrderedGraph> {
        let g = OrderedGraph::new_unchecked(vertex_count, edges, limits)?;
        if !g.is_connected() {
            return Err(Error::InvalidGraph("graph is disconnected".into()));
        }
        Ok(g)
    }

    /// Builds a graph without the connectivity check. Disconnected graphs
    /// are handled with matroid semantics (spanning forests).
    pub fn new_unchecked(
        vertex_count: usize,
        edges: &[(usize, usize)],
        limits: Limits,
    ) -> Result<OrderedGraph> {
        if edges.len() > MAX_EDGES {
            return Err(Error::InvalidGraph(format!(
                "{} edges, at most {MAX_EDGES} supported",
                edges.len()
            )));
        }
        for (k, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge {} = ({u},{v}) uses a vertex outside 0..{vertex_count}",
                    k + 1
                )));
            }
        }
        Ok(OrderedGraph {
            ambient: Arc::new(Ambient {
                vertex_count,
                ends: edges.to_vec(),
                limits,
                cache: Mutex::new(HashMap::new()),
            }),
            contracted: EdgeSet::EMPTY,
            live: EdgeSet::full(edges.len()),
        })
    }

    /// The same graph with other enumeration limits.
    pub fn relimited(&self, limits: Limits) -> OrderedGraph {
        OrderedGraph {
            ambient: Arc::new(Ambient {
                vertex_count: self.ambient.vertex_count,
                ends: self.ambient.ends.clone(),
                limits,
                cache: Mutex::new(HashMap::new()),
            }),
            contracted: self.contracted,
            live: self.live,
        }
    }

    pub fn limits(&self) -> Limits {
        self.ambient.limits
    }

    /// Edges of this graph (the live set).
    pub fn edges(&self) -> EdgeSet {
        self.live
    }

    /// Edges contracted to obtain this minor from the ambient graph.
    pub fn contracted(&self) -> EdgeSet {
        self.contracted
    }

    pub fn edge_count(&self) -> usize {
        self.live.len()
    }

    /// Vertex count of the ambient graph, isolated vertices included.
    pub fn ambient_vertex_count(&self) -> usize {
        self.ambient.vertex_count
    }

    /// Number of ambient edges.
    pub fn ambient_edge_count(&self) -> usize {
        self.ambient.ends.len()
    }

    /// Endpoints of `e` as stored in the ambient graph.
    pub fn ambient_endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.ambient.ends[e.index()]
    }

    /// The ambient graph this minor lives in.
    pub fn ambient(&self) -> OrderedGraph {
        OrderedGraph {
            ambient: self.ambient.clone(),
            contracted: EdgeSet::EMPTY,
            live: EdgeSet::full(self.ambient.ends.len()),
        }
    }

    pub(crate) fn data(&self) -> Arc<MinorData> {
        let key = (self.contracted.bits(), self.live.bits());
        let mut cache = self.ambient.cache.lock().expect("cache lock");
        cache
            .entry(key)
            .or_insert_with(|| Arc::new(self.build_data()))
            .clone()
    }

    fn build_data(&self) -> MinorData {
        let n = self.ambient.vertex_count;
        let mut uf = UnionFind::new(n);
        for e in self.contracted {
            let (u, v) = self.ambient.ends[e.index()];
            uf.union(u, v);
        }
        let rep: Vec<usize> = (0..n).map(|v| uf.find(v)).collect();
        let mut touched = vec![false; n];
        for e in self.live {
            let (u, v) = self.ambient.ends[e.index()];
            touched[rep[u]] = true;
            touched[rep[v]] = true;
        }
        let vertices: Vec<usize> = (0..n).filter(|&v| touched[v]).collect();
        let mut uf2 = UnionFind::new(n);
        let mut rank = 0;
        for e in self.live {
            let (u, v) = self.ambient.ends[e.index()];
            if uf2.union(rep[u], rep[v]) {
                rank += 1;
            }
        }
        MinorData {
            rep,
            vertices,
            rank,
            cycles: OnceLock::new(),
            cocycles: OnceLock::new(),
            forests: OnceLock::new(),
            tree_activities: OnceLock::new(),
            tutte: OnceLock::new(),
        }
    }

    fn check_subset(&self, f: EdgeSet) -> Result<()> {
        if f.is_subset(self.live) {
            Ok(())
        } else {
            Err(Error::InvalidSubset {
                set: f,
                live: self.live,
            })
        }
    }

    fn check_edge(&self, e: EdgeId) -> Result<()> {
        if self.live.contains(e) {
            Ok(())
        } else {
            Err(Error::UnknownEdge(e))
        }
    }

    pub(crate) fn check_enum(&self, what: &'static str) -> Result<()> {
        let limit = self.ambient.limits.max_enum_edges;
        if self.live.len() > limit {
            Err(Error::ResourceLimit {
                what,
                needed: self.live.len(),
                limit,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_orientations(&self, what: &'static str) -> Result<()> {
        let limit = self.ambient.limits.max_orientation_edges;
        if self.live.len() > limit {
            Err(Error::ResourceLimit {
                what,
                needed: self.live.len(),
                limit,
            })
        } else {
            Ok(())
        }
    }

    /// The restriction `G(F)`: keeps only the edges of `F`.
    pub fn restrict(&self, f: EdgeSet) -> Result<OrderedGraph> {
        self.check_subset(f)?;
        Ok(OrderedGraph {
            ambient: self.ambient.clone(),
            contracted: self.contracted,
            live: f,
        })
    }

    /// The deletion `G \ F`, that is `G(E \ F)`.
    pub fn delete(&self, f: EdgeSet) -> Result<OrderedGraph> {
        self.check_subset(f)?;
        self.restrict(self.live - f)
    }

    /// The contraction `G / F`.
    pub fn contract(&self, f: EdgeSet) -> Result<OrderedGraph> {
        self.check_subset(f)?;
        Ok(OrderedGraph {
            ambient: self.ambient.clone(),
            contracted: self.contracted | f,
            live: self.live - f,
        })
    }

    /// The minor `G(F) / F'` for `F' ⊆ F`.
    pub fn minor(&self, f: EdgeSet, f_inner: EdgeSet) -> Result<OrderedGraph> {
        if !f_inner.is_subset(f) {
            return Err(Error::InvalidSubset {
                set: f_inner,
                live: f,
            });
        }
        self.restrict(f)?.contract(f_inner)
    }

    /// Endpoints of `e` in this minor, as representatives of the vertex
    /// classes. The first is the tail.
    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        let d = self.data();
        let (u, v) = self.ambient.ends[e.index()];
        (d.rep[u], d.rep[v])
    }

    /// Vertices of this minor: classes touched by at least one edge.
    pub fn vertices(&self) -> Vec<usize> {
        self.data().vertices.clone()
    }

    pub fn vertex_count(&self) -> usize {
        self.data().vertices.len()
    }

    /// Rank of the whole graph: vertices minus components.
    pub fn rank(&self) -> usize {
        self.data().rank
    }

    /// Rank of the edge subset `a`.
    pub fn rank_of(&self, a: EdgeSet) -> Result<usize> {
        self.check_subset(a)?;
        Ok(rank_with(&self.data(), &self.ambient.ends, a))
    }

    /// Number of connected components, isolated vertices ignored.
    pub fn component_count(&self) -> usize {
        let d = self.data();
        d.vertices.len() - d.rank
    }

    /// Connected once isolated vertices are ignored. The empty graph counts
    /// as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (u, v) = self.endpoints(e);
        u == v
    }

    pub fn is_isthmus(&self, e: EdgeId) -> bool {
        let d = self.data();
        rank_with(&d, &self.ambient.ends, self.live.without(e)) < d.rank
    }

    /// Loop, isthmus or neither.
    pub fn classify_edge(&self, e: EdgeId) -> Result<EdgeKind> {
        self.check_edge(e)?;
        Ok(if self.is_loop(e) {
            EdgeKind::Loop
        } else if self.is_isthmus(e) {
            EdgeKind::Isthmus
        } else {
            EdgeKind::Ordinary
        })
    }

    pub fn has_loop(&self) -> bool {
        self.live.iter().any(|e| self.is_loop(e))
    }

    pub fn has_isthmus(&self) -> bool {
        self.live.iter().any(|e| self.is_isthmus(e))
    }

    /// Loopless, at least two edges, connected and without cut vertex.
    /// A loopless graph on two vertices counts as 2-connected.
    pub fn is_2connected_loopless(&self) -> bool {
        if self.live.len() < 2 || self.has_loop() || !self.is_connected() {
            return false;
        }
        let d = self.data();
        if d.vertices.len() <= 2 {
            return true;
        }
        let ends = &self.ambient.ends;
        d.vertices.iter().all(|&cut| {
            let mut uf = UnionFind::new(self.ambient.vertex_count);
            let mut merges = 0;
            for e in self.live {
                let (u, v) = ends[e.index()];
                let (u, v) = (d.rep[u], d.rep[v]);
                if u != cut && v != cut && uf.union(u, v) {
                    merges += 1;
                }
            }
            merges == d.vertices.len() - 2
        })
    }

    /// `G/F` has no loop and `G(F)` has no isthmus.
    pub fn is_cyclic_flat(&self, f: EdgeSet) -> Result<bool> {
        Ok(!self.contract(f)?.has_loop() && !self.restrict(f)?.has_isthmus())
    }

    /// True if `s` is a cycle: nonempty, connected and every vertex of even
    /// degree two (a loop counts twice).
    pub fn is_cycle(&self, s: EdgeSet) -> bool {
        s.is_subset(self.live) && is_cycle_with(&self.data(), &self.ambient.ends, s)
    }

    /// True if `s` is a cocycle: an inclusion-minimal edge cut.
    pub fn is_cocycle(&self, s: EdgeSet) -> bool {
        s.is_subset(self.live) && cocycle_sign(&self.data(), &self.ambient.ends, self.live, s).is_some()
    }

    /// All signed cycles, each once, with its smallest edge positive. Sorted.
    pub fn signed_cycles(&self) -> Result<Vec<SignedEdgeSet>> {
        self.check_enum("cycle enumeration")?;
        let d = self.data();
        Ok(d.cycles
            .get_or_init(|| {
                let ends = &self.ambient.ends;
                let mut out: Vec<SignedEdgeSet> = self
                    .live
                    .subsets()
                    .filter(|s| !s.is_empty() && is_cycle_with(&d, ends, *s))
                    .map(|s| sign_cycle(&d, ends, s))
                    .collect();
                out.sort_by_key(|c| c.support());
                out
            })
            .clone())
    }

    /// All signed cocycles, each once, with its smallest edge positive. Sorted.
    pub fn signed_cocycles(&self) -> Result<Vec<SignedEdgeSet>> {
        self.check_enum("cocycle enumeration")?;
        let d = self.data();
        Ok(d.cocycles
            .get_or_init(|| {
                let ends = &self.ambient.ends;
                let mut out: Vec<SignedEdgeSet> = self
                    .live
                    .subsets()
                    .filter(|s| !s.is_empty())
                    .filter_map(|s| cocycle_sign(&d, ends, self.live, s))
                    .collect();
                out.sort_by_key(|c| c.support());
                out
            })
            .clone())
    }

    /// All cycles as unsigned sets, sorted.
    pub fn all_cycles(&self) -> Result<Vec<EdgeSet>> {
        Ok(self.signed_cycles()?.iter().map(|c| c.support()).collect())
    }

    /// All cocycles as unsigned sets, sorted.
    pub fn all_cocycles(&self) -> Result<Vec<EdgeSet>> {
        Ok(self.signed_cocycles()?.iter().map(|c| c.support()).collect())
    }

    /// Is `t` a maximal spanning forest (a spanning tree when connected)?
    pub fn is_spanning_tree(&self, t: EdgeSet) -> bool {
        if !t.is_subset(self.live) {
            return false;
        }
        let d = self.data();
        t.len() == d.rank && rank_with(&d, &self.ambient.ends, t) == d.rank
    }

    fn check_tree(&self, t: EdgeSet) -> Result<()> {
        if self.is_spanning_tree(t) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{t:?} is not a spanning tree")))
        }
    }

    /// All maximal spanning forests, sorted lexicographically. For a
    /// connected graph these are the spanning trees.
    pub fn spanning_forests(&self) -> Result<Vec<EdgeSet>> {
        self.check_enum("spanning tree enumeration")?;
        let d = self.data();
        Ok(d.forests
            .get_or_init(|| {
                let ends = &self.ambient.ends;
                let mut out: Vec<EdgeSet> = self
                    .live
                    .subsets()
                    .filter(|s| s.len() == d.rank && rank_with(&d, ends, *s) == d.rank)
                    .collect();
                out.sort();
                out
            })
            .clone())
    }

    /// All spanning trees, sorted lexicographically.
    pub fn spanning_trees(&self) -> Result<Vec<EdgeSet>> {
        if !self.is_connected() {
            return Err(Error::Domain("spanning trees of a disconnected graph".into()));
        }
        self.spanning_forests()
    }

    /// The fundamental cycle `C(T;e)`, with `e` positive.
    pub fn fundamental_cycle(&self, t: EdgeSet, e: EdgeId) -> Result<SignedEdgeSet> {
        self.check_tree(t)?;
        self.check_edge(e)?;
        if t.contains(e) {
            return Err(Error::Domain(format!("edge {e} belongs to the tree")));
        }
        Ok(self.fundamental_cycle_unchecked(t, e))
    }

    /// The fundamental cocycle `C*(T;b)`, with `b` positive.
    pub fn fundamental_cocycle(&self, t: EdgeSet, b: EdgeId) -> Result<SignedEdgeSet> {
        self.check_tree(t)?;
        if !t.contains(b) {
            return Err(Error::Domain(format!("edge {b} is not in the tree")));
        }
        Ok(self.fundamental_cocycle_unchecked(t, b))
    }

    /// Walks the tree path from the head of `e` back to its tail.
    pub(crate) fn fundamental_cycle_unchecked(&self, t: EdgeSet, e: EdgeId) -> SignedEdgeSet {
        let d = self.data();
        let ends = &self.ambient.ends;
        let end = |x: EdgeId| {
            let (u, v) = ends[x.index()];
            (d.rep[u], d.rep[v])
        };
        let (tail, head) = end(e);
        let mut out = SignedEdgeSet {
            positive: EdgeSet::singleton(e),
            negative: EdgeSet::EMPTY,
        };
        if tail == head {
            return out;
        }
        // parent[v] = (edge, previous vertex) on a search from `head`.
        let mut parent: HashMap<usize, Option<(EdgeId, usize)>> = HashMap::new();
        parent.insert(head, None);
        let mut stack = vec![head];
        while let Some(x) = stack.pop() {
            if x == tail {
                break;
            }
            for f in t {
                let (a, b) = end(f);
                let y = if a == x {
                    b
                } else if b == x {
                    a
                } else {
                    continue;
                };
                if let std::collections::hash_map::Entry::Vacant(slot) = parent.entry(y) {
                    slot.insert(Some((f, x)));
                    stack.push(y);
                }
            }
        }
        // Backtrack from tail: edge f was crossed from `prev` to `cur`.
        let mut cur = tail;
        while let Some(Some((f, prev))) = parent.get(&cur).copied() {
            let (a, _) = end(f);
            if a == prev {
                out.positive.insert(f);
            } else {
                out.negative.insert(f);
            }
            cur = prev;
        }
        out
    }

    pub(crate) fn fundamental_cocycle_unchecked(&self, t: EdgeSet, b: EdgeId) -> SignedEdgeSet {
        let d = self.data();
        let ends = &self.ambient.ends;
        let mut uf = UnionFind::new(self.ambient.vertex_count);
        for f in t.without(b) {
            let (u, v) = ends[f.index()];
            uf.union(d.rep[u], d.rep[v]);
        }
        let side = |uf: &mut UnionFind, x: usize| uf.find(d.rep[x]);
        let (bt, bh) = ends[b.index()];
        let tail_side = side(&mut uf, bt);
        let head_side = side(&mut uf, bh);
        let mut out = SignedEdgeSet::default();
        for f in self.live {
            let (u, v) = ends[f.index()];
            let (su, sv) = (side(&mut uf, u), side(&mut uf, v));
            if su == tail_side && sv == head_side {
                out.positive.insert(f);
            } else if su == head_side && sv == tail_side {
                out.negative.insert(f);
            }
        }
        out
    }
}

fn rank_with(d: &MinorData, ends: &[(usize, usize)], a: EdgeSet) -> usize {
    let mut uf = UnionFind::new(d.rep.len());
    let mut r = 0;
    for e in a {
        let (u, v) = ends[e.index()];
        if uf.union(d.rep[u], d.rep[v]) {
            r += 1;
        }
    }
    r
}

fn is_cycle_with(d: &MinorData, ends: &[(usize, usize)], s: EdgeSet) -> bool {
    if s.is_empty() {
        return false;
    }
    let mut degree: HashMap<usize, u32> = HashMap::new();
    let mut uf = UnionFind::new(d.rep.len());
    let mut merges = 0;
    for e in s {
        let (u, v) = ends[e.index()];
        let (u, v) = (d.rep[u], d.rep[v]);
        *degree.entry(u).or_default() += 1;
        *degree.entry(v).or_default() += 1;
        if uf.union(u, v) {
            merges += 1;
        }
    }
    degree.values().all(|&k| k == 2) && merges + 1 == degree.len()
}

/// Walks a cycle starting along its smallest edge, tail to head.
fn sign_cycle(d: &MinorData, ends: &[(usize, usize)], s: EdgeSet) -> SignedEdgeSet {
    let end = |x: EdgeId| {
        let (u, v) = ends[x.index()];
        (d.rep[u], d.rep[v])
    };
    let first = s.min_edge().expect("nonempty cycle");
    let mut out = SignedEdgeSet {
        positive: EdgeSet::singleton(first),
        negative: EdgeSet::EMPTY,
    };
    let mut left = s.without(first);
    let (_, mut cur) = end(first);
    while let Some(f) = left.iter().find(|&f| {
        let (a, b) = end(f);
        a == cur || b == cur
    }) {
        let (a, b) = end(f);
        if a == cur {
            out.positive.insert(f);
            cur = b;
        } else {
            out.negative.insert(f);
            cur = a;
        }
        left.remove(f);
    }
    debug_assert!(left.is_empty());
    out
}

/// Signs `s` as a cocycle if it is one: the smallest edge is positive, and
/// an edge is positive when its tail lies on the side of that edge's tail.
fn cocycle_sign(
    d: &MinorData,
    ends: &[(usize, usize)],
    live: EdgeSet,
    s: EdgeSet,
) -> Option<SignedEdgeSet> {
    let mut uf = UnionFind::new(d.rep.len());
    let mut r = 0;
    for e in live - s {
        let (u, v) = ends[e.index()];
        if uf.union(d.rep[u], d.rep[v]) {
            r += 1;
        }
    }
    if r + 1 != d.rank {
        return None;
    }
    let first = s.min_edge()?;
    let (ft, _) = ends[first.index()];
    let ref_side = uf.find(d.rep[ft]);
    let mut out = SignedEdgeSet::default();
    for e in s {
        let (u, v) = ends[e.index()];
        let (su, sv) = (uf.find(d.rep[u]), uf.find(d.rep[v]));
        if su == sv {
            return None;
        }
        if su == ref_side {
            out.positive.insert(e);
        } else {
            out.negative.insert(e);
        }
    }
    Some(out)
}
