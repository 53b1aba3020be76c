//! The invariant suite run by `verify` and by the acceptance test.
//!
//! Every check recomputes its objects by a second route, or counts a target
//! family by direct enumeration, and compares.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use active_bijection::activity::{
    locate_interval, orientation_activities, subset_activities, tree_activities,
};
use active_bijection::bijection::{
    alpha, alpha_refined, alpha_uniactive, tree_active_data, tree_active_filtration,
    DeletionContraction,
};
use active_bijection::filtration::{
    active_filtration, active_minors, activity_class, enumerate_connected_filtrations, PartKind,
};
use active_bijection::tutte::{
    beta, convolution, expand_four_var, four_var_by_orientations, four_var_by_subsets,
    tutte_by_filtrations, tutte_by_orientations, tutte_by_trees,
};
use active_bijection::{ActivitySets, Digraph, EdgeId, EdgeSet, OrderedGraph, SignedEdgeSet};
use rayon::prelude::*;

pub const ORTHOGONALITY: &str = "orthogonality";
pub const CRAPO: &str = "crapo-intervals";
pub const TUTTE: &str = "tutte-four-way";
pub const FOUR_VAR: &str = "four-variable";
pub const BETA: &str = "beta-2-connected";
pub const CLASSES: &str = "activity-classes";
pub const TRANSPORT: &str = "activity-transport";
pub const REPRESENTATIVES: &str = "class-representatives";
pub const REFINED: &str = "refined-bijection";
pub const ROUTE_DC: &str = "route-decomposition-dc";
pub const ROUTE_UNIACTIVE: &str = "route-uniactive";
pub const ROUTE_REFINED: &str = "route-refined";
pub const ROUTE_FILTRATION: &str = "route-tree-filtration";
pub const ROUND_TRIP_PREIMAGES: &str = "round-trip-preimages";
pub const ROUND_TRIP_REFINED: &str = "round-trip-refined";
pub const RESTRICTIONS: &str = "restriction-counts";
pub const CRITERION_UNIQUE: &str = "criterion-uniqueness";
pub const FILTRATION_UNIQUE: &str = "filtration-uniqueness";

pub const CHECKS: &[&str] = &[
    ORTHOGONALITY,
    CRAPO,
    TUTTE,
    FOUR_VAR,
    BETA,
    CLASSES,
    TRANSPORT,
    REPRESENTATIVES,
    REFINED,
    ROUTE_DC,
    ROUTE_UNIACTIVE,
    ROUTE_REFINED,
    ROUTE_FILTRATION,
    ROUND_TRIP_PREIMAGES,
    ROUND_TRIP_REFINED,
    RESTRICTIONS,
    CRITERION_UNIQUE,
    FILTRATION_UNIQUE,
];

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Test hook: flip the sign of the smallest edge of every cocycle
    /// before the orthogonality check.
    pub corrupt_signs: bool,
    /// Largest edge count for the comparison against all connected
    /// filtrations.
    pub filtration_enum_max_edges: usize,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            corrupt_signs: false,
            filtration_enum_max_edges: 7,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub name: &'static str,
    /// `None` when the check passed.
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

type Outcome = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn lib<T>(r: active_bijection::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Everything computed once per graph: for each reorientation `A` of the
/// stored orientation, its active tree and activity sets.
struct Ctx<'a> {
    g: &'a OrderedGraph,
    reference: Digraph,
    subsets: Vec<EdgeSet>,
    alpha: Vec<EdgeSet>,
    acts: Vec<ActivitySets>,
    refined: Vec<EdgeSet>,
    trees: Vec<EdgeSet>,
}

impl<'a> Ctx<'a> {
    fn new(g: &'a OrderedGraph) -> std::result::Result<Ctx<'a>, String> {
        let reference = Digraph::new(g.clone());
        let subsets: Vec<EdgeSet> = g.edges().subsets().collect();
        let mut slots = vec![EdgeSet::EMPTY; subsets.len()];
        let mut acts = Vec::with_capacity(subsets.len());
        let mut refined = vec![EdgeSet::EMPTY; subsets.len()];
        for &a in &subsets {
            let d = reference.reoriented(a);
            let i = a.bits() as usize;
            slots[i] = lib(alpha(&d))?;
            refined[i] = lib(alpha_refined(&reference, a))?;
            acts.push((i, lib(d.activity_sets())?));
        }
        acts.sort_by_key(|(i, _)| *i);
        Ok(Ctx {
            g,
            reference,
            subsets,
            alpha: slots,
            acts: acts.into_iter().map(|(_, a)| a).collect(),
            refined,
            trees: lib(g.spanning_trees())?,
        })
    }

    fn alpha(&self, a: EdgeSet) -> EdgeSet {
        self.alpha[a.bits() as usize]
    }

    fn acts(&self, a: EdgeSet) -> ActivitySets {
        self.acts[a.bits() as usize]
    }

    fn refined(&self, a: EdgeSet) -> EdgeSet {
        self.refined[a.bits() as usize]
    }
}

/// As many agreeing as disagreeing signs on the common edges.
fn orthogonal(c: &SignedEdgeSet, d: &SignedEdgeSet) -> bool {
    let inter = c.support() & d.support();
    let agree = (c.positive & d.positive) | (c.negative & d.negative);
    2 * agree.len() == inter.len()
}

fn orthogonality(g: &OrderedGraph, corrupt: bool) -> Outcome {
    let cycles = lib(g.signed_cycles())?;
    let mut cocycles = lib(g.signed_cocycles())?;
    if corrupt {
        for d in &mut cocycles {
            let m = d.support().min_edge().expect("nonempty cocycle");
            *d = d.reoriented(EdgeSet::singleton(m));
        }
    }
    for c in &cycles {
        for d in &cocycles {
            ensure!(orthogonal(c, d), "cycle {c:?} and cocycle {d:?} are not orthogonal");
        }
    }
    Ok(())
}

fn crapo(cx: &Ctx) -> Outcome {
    let mut total = 0u64;
    for &t in &cx.trees {
        let a = lib(tree_activities(cx.g, t))?;
        total += 1 << (a.internal.len() + a.external.len());
    }
    ensure!(total == cx.subsets.len() as u64, "interval sizes sum to {total}");
    for &a in &cx.subsets {
        lib(locate_interval(cx.g, a))?;
    }
    Ok(())
}

fn tutte_four_way(g: &OrderedGraph) -> Outcome {
    let t = lib(tutte_by_trees(g))?;
    let o = lib(tutte_by_orientations(g))?;
    let f = lib(tutte_by_filtrations(g))?;
    let c = lib(convolution(g))?;
    ensure!(t == o, "trees {t} vs orientations {o}");
    ensure!(t == f, "trees {t} vs filtrations {f}");
    ensure!(t == c, "trees {t} vs convolution {c}");
    let n = lib(g.spanning_trees())?.len() as i128;
    ensure!(t.eval(1, 1) == n, "t(1,1) = {} but {n} trees", t.eval(1, 1));
    Ok(())
}

fn four_var(cx: &Ctx) -> Outcome {
    let s = lib(four_var_by_subsets(cx.g))?;
    let o = lib(four_var_by_orientations(&cx.reference))?;
    let e = expand_four_var(&lib(tutte_by_trees(cx.g))?);
    ensure!(s == o, "subset table differs from orientation table");
    ensure!(s == e, "subset table differs from T(x+u,y+v)");
    ensure!(s.total() == cx.subsets.len() as u64, "total {}", s.total());
    Ok(())
}

fn beta_check(g: &OrderedGraph) -> Outcome {
    if g.edge_count() < 2 {
        return Ok(());
    }
    let b = lib(beta(g))?;
    ensure!(
        (b != 0) == g.is_2connected_loopless(),
        "beta = {b} but 2-connected loopless = {}",
        g.is_2connected_loopless()
    );
    Ok(())
}

fn classes(cx: &Ctx) -> Outcome {
    let e = cx.g.edges();
    let mut rep_of: HashMap<EdgeSet, EdgeSet> = HashMap::new();
    for &a in &cx.subsets {
        let class = lib(activity_class(&cx.reference.reoriented(a)))?;
        let acts = cx.acts(a);
        let size = 1usize << (acts.active.len() + acts.dual_active.len());
        ensure!(class.len() == size, "class of {a:?} has {} members, not {size}", class.len());
        ensure!(class.contains(a), "class of {a:?} misses it");
        ensure!(cx.alpha(e ^ a) == cx.alpha(a), "alpha differs on {a:?} and its opposite");
        for m in class.members() {
            ensure!(cx.alpha(m) == cx.alpha(a), "alpha not constant on the class of {a:?}");
            if let Some(&r) = rep_of.get(&m) {
                ensure!(r == class.representative, "{m:?} lies in two classes");
            }
            rep_of.insert(m, class.representative);
        }
    }
    ensure!(rep_of.len() == cx.subsets.len(), "classes do not cover 2^E");
    let mut fiber: HashMap<EdgeSet, usize> = HashMap::new();
    for &a in &cx.subsets {
        *fiber.entry(cx.alpha(a)).or_default() += 1;
    }
    for &t in &cx.trees {
        let acts = lib(tree_activities(cx.g, t))?;
        let want = 1usize << (acts.internal.len() + acts.external.len());
        let got = fiber.get(&t).copied().unwrap_or(0);
        ensure!(got == want, "fiber of {t:?} has {got} orientations, not {want}");
    }
    Ok(())
}

fn transport(cx: &Ctx) -> Outcome {
    for &a in &cx.subsets {
        let t = cx.alpha(a);
        let ta = lib(tree_activities(cx.g, t))?;
        let acts = cx.acts(a);
        ensure!(
            ta.internal == acts.dual_active && ta.external == acts.active,
            "Int/Ext of {t:?} differ from O*/O of {a:?}"
        );
    }
    Ok(())
}

fn representatives(cx: &Ctx) -> Outcome {
    let mut reps = BTreeSet::new();
    for &a in &cx.subsets {
        let acts = cx.acts(a);
        if acts.active.is_disjoint(a) && acts.dual_active.is_disjoint(a) {
            reps.insert(a);
        }
    }
    let mut count: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let mut seen = BTreeSet::new();
    for &r in &reps {
        let class = lib(activity_class(&cx.reference.reoriented(r)))?;
        ensure!(class.representative == r, "{r:?} is fixed but not its class representative");
        ensure!(seen.insert(class.representative), "two fixed members in one class");
        let acts = cx.acts(r);
        *count.entry((acts.dual_active.len(), acts.active.len())).or_default() += 1;
    }
    let t = lib(tutte_by_trees(cx.g))?;
    ensure!(&count == t.coeffs(), "fixed members counted {count:?}, t = {t}");
    Ok(())
}

fn refined(cx: &Ctx) -> Outcome {
    let mut image = BTreeSet::new();
    for &a in &cx.subsets {
        let x = cx.refined(a);
        ensure!(image.insert(x), "{x:?} has two preimages");
        let s = lib(subset_activities(cx.g, x))?;
        let o = lib(orientation_activities(&cx.reference, a))?;
        ensure!(
            (s.int_, s.p, s.ext, s.q) == (o.theta_star, o.theta_star_bar, o.theta, o.theta_bar),
            "parameters of {a:?} and {x:?} differ"
        );
        let acts = cx.acts(a);
        let fixed = acts.active.is_disjoint(a) && acts.dual_active.is_disjoint(a);
        ensure!((x == cx.alpha(a)) == fixed, "fixed point rule fails at {a:?}");
    }
    Ok(())
}

fn route_dc(cx: &Ctx, engine: &mut DeletionContraction) -> Outcome {
    for &a in &cx.subsets {
        let t = lib(engine.alpha(&cx.reference.reoriented(a)))?;
        ensure!(t == cx.alpha(a), "decomposition {:?} vs deletion/contraction {t:?} at {a:?}", cx.alpha(a));
    }
    Ok(())
}

fn route_uniactive(cx: &Ctx, engine: &mut DeletionContraction) -> Outcome {
    for &a in &cx.subsets {
        for m in lib(active_minors(&cx.reference.reoriented(a)))? {
            let s = lib(alpha_uniactive(&m.digraph))?;
            let r = lib(engine.alpha_uniactive(&m.digraph))?;
            ensure!(s == r, "criterion {s:?} vs recursion {r:?} on a minor of {a:?}");
        }
    }
    Ok(())
}

fn route_refined(cx: &Ctx, engine: &mut DeletionContraction) -> Outcome {
    for &a in &cx.subsets {
        let r = lib(engine.alpha_refined(&cx.reference, a))?;
        ensure!(r == cx.refined(a), "refined {:?} vs recursion {r:?} at {a:?}", cx.refined(a));
    }
    Ok(())
}

fn route_filtration(cx: &Ctx) -> Outcome {
    for &t in &cx.trees {
        let f = lib(tree_active_filtration(cx.g, t))?;
        let data = lib(tree_active_data(cx.g, t, None))?;
        ensure!(f.parts() == data.partition, "partition of {t:?} differs from the single pass");
        for &a in &data.preimages {
            let fa = lib(active_filtration(&cx.reference.reoriented(a)))?;
            ensure!(fa == f, "filtration of {t:?} is {f}, of its preimage {a:?} is {fa}");
        }
    }
    Ok(())
}

fn round_trip_preimages(cx: &Ctx) -> Outcome {
    for &t in &cx.trees {
        let data = lib(tree_active_data(cx.g, t, None))?;
        let want: Vec<EdgeSet> = cx
            .subsets
            .iter()
            .copied()
            .filter(|&a| cx.alpha(a) == t)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        ensure!(data.preimages == want, "preimages of {t:?}: {:?} vs {want:?}", data.preimages);
    }
    Ok(())
}

fn round_trip_refined(cx: &Ctx) -> Outcome {
    for &x in &cx.subsets {
        let t = lib(locate_interval(cx.g, x))?;
        let data = lib(tree_active_data(cx.g, t, Some((&cx.reference, x))))?;
        let a = data
            .refined_preimage
            .ok_or_else(|| format!("no refined preimage for {x:?}"))?;
        ensure!(cx.refined(a) == x, "refined preimage {a:?} of {x:?} maps to {:?}", cx.refined(a));
    }
    Ok(())
}

fn restrictions(cx: &Ctx) -> Outcome {
    let g = cx.g;
    let e = g.edges();
    let t = lib(tutte_by_trees(g))?;
    let cycles = lib(g.all_cycles())?;
    let rank = g.rank();
    let mut internal = Vec::new();
    let mut external = Vec::new();
    for &tr in &cx.trees {
        let a = lib(tree_activities(g, tr))?;
        if a.external.is_empty() {
            internal.push((tr, a.internal));
        }
        if a.internal.is_empty() {
            external.push((tr, a.external));
        }
    }
    let broken: Vec<EdgeSet> = cycles
        .iter()
        .map(|c| c.without(c.min_edge().expect("nonempty cycle")))
        .collect();
    let mut families: Vec<(&str, Box<dyn Fn(EdgeSet, ActivitySets) -> bool>, BTreeSet<EdgeSet>, (i128, i128))> = Vec::new();
    let all = || cx.subsets.iter().copied();
    let nbc: BTreeSet<EdgeSet> = all()
        .filter(|a| broken.iter().all(|b| !b.is_subset(*a)))
        .collect();
    let below_internal: BTreeSet<EdgeSet> = all()
        .filter(|a| internal.iter().any(|(t, _)| a.is_subset(*t)))
        .collect();
    ensure!(nbc == below_internal, "no-broken-circuit sets differ from subsets of internal trees");
    families.push(("acyclic", Box::new(|_, s| s.active.is_empty()), nbc, (2, 0)));
    families.push((
        "strongly connected",
        Box::new(|_, s| s.dual_active.is_empty()),
        all().filter(|a| external.iter().any(|(t, _)| t.is_subset(*a))).collect(),
        (0, 2),
    ));
    families.push((
        "dual-active-fixed acyclic",
        Box::new(|a, s| s.active.is_empty() && s.dual_active.is_disjoint(a)),
        internal.iter().map(|(t, _)| *t).collect(),
        (1, 0),
    ));
    families.push((
        "dual-active-fixed acyclic w.r.t. the opposite",
        Box::new(move |a, s| s.active.is_empty() && s.dual_active.is_disjoint(e ^ a)),
        internal.iter().map(|(t, i)| *t - *i).collect(),
        (1, 0),
    ));
    families.push((
        "active-fixed strongly connected",
        Box::new(|a, s| s.dual_active.is_empty() && s.active.is_disjoint(a)),
        external.iter().map(|(t, _)| *t).collect(),
        (0, 1),
    ));
    families.push((
        "active-fixed strongly connected w.r.t. the opposite",
        Box::new(move |a, s| s.dual_active.is_empty() && s.active.is_disjoint(e ^ a)),
        external.iter().map(|(t, x)| *t | *x).collect(),
        (0, 1),
    ));
    families.push((
        "active-fixed",
        Box::new(|a, s| s.active.is_disjoint(a)),
        all().filter(|a| g.rank_of(*a).ok() == Some(a.len())).collect(),
        (2, 1),
    ));
    families.push((
        "dual-active-fixed",
        Box::new(|a, s| s.dual_active.is_disjoint(a)),
        all().filter(|a| g.rank_of(*a).ok() == Some(rank)).collect(),
        (1, 2),
    ));
    families.push((
        "active-fixed and dual-active-fixed",
        Box::new(|a, s| s.active.is_disjoint(a) && s.dual_active.is_disjoint(a)),
        cx.trees.iter().copied().collect(),
        (1, 1),
    ));
    for (name, select, target, (x, y)) in families {
        let image: BTreeSet<EdgeSet> = all()
            .filter(|&a| select(a, cx.acts(a)))
            .map(|a| cx.refined(a))
            .collect();
        ensure!(image == target, "{name} orientations do not map onto their family");
        let n = t.eval(x, y);
        ensure!(target.len() as i128 == n, "{name}: {} sets, t({x},{y}) = {n}", target.len());
    }
    Ok(())
}

/// `e` and the smallest edge of `s` have opposite signs in `d`.
fn opposed(d: &Digraph, s: &SignedEdgeSet, e: EdgeId) -> bool {
    let s = d.signs(s);
    let a = s.support().min_edge().expect("nonempty");
    a != e && s.sign(a) != s.sign(e)
}

/// Trees of `d` meeting the fully optimal sign criterion.
fn criterion_trees(d: &Digraph, cyclic: bool) -> std::result::Result<Vec<EdgeSet>, String> {
    let g = d.graph();
    let p = g.edges().min_edge().expect("nonempty minor");
    let mut out = Vec::new();
    for t in lib(g.spanning_trees())? {
        let mut ok = true;
        for e in g.edges() {
            ok &= if t.contains(e) {
                (!cyclic && e == p) || opposed(d, &lib(g.fundamental_cocycle(t, e))?, e)
            } else {
                (cyclic && e == p) || opposed(d, &lib(g.fundamental_cycle(t, e))?, e)
            };
        }
        if ok {
            out.push(t);
        }
    }
    Ok(out)
}

fn criterion_unique(cx: &Ctx) -> Outcome {
    for &a in &cx.subsets {
        let minors = lib(active_minors(&cx.reference.reoriented(a)))?;
        let mut union = EdgeSet::EMPTY;
        for m in minors {
            let hits = criterion_trees(&m.digraph, m.kind == PartKind::Cyclic)?;
            ensure!(hits.len() == 1, "{} trees meet the criterion on a minor of {a:?}", hits.len());
            union |= hits[0];
        }
        ensure!(union == cx.alpha(a), "criterion trees of {a:?} do not assemble to alpha");
    }
    Ok(())
}

fn filtration_unique(cx: &Ctx, max_edges: usize) -> Outcome {
    if cx.g.edge_count() > max_edges {
        return Ok(());
    }
    let filtrations = lib(enumerate_connected_filtrations(cx.g))?;
    let minors: Vec<_> = filtrations
        .iter()
        .map(|f| lib(f.minors(cx.g)))
        .collect::<std::result::Result<_, _>>()?;
    for &a in &cx.subsets {
        let mut hits = Vec::new();
        for (f, ms) in filtrations.iter().zip(&minors) {
            let mut ok = true;
            for (m, kind) in ms {
                let d = lib(Digraph::with_reorientation(m.clone(), a & m.edges()))?;
                let p = m.edges().min_edge().expect("nonempty layer");
                ok &= match kind {
                    PartKind::Acyclic => lib(d.is_bipolar(p))?,
                    PartKind::Cyclic => lib(d.is_cyclic_bipolar(p))?,
                };
                if !ok {
                    break;
                }
            }
            if ok {
                hits.push(f);
            }
        }
        ensure!(hits.len() == 1, "{} connected filtrations fit {a:?}", hits.len());
        let f = lib(active_filtration(&cx.reference.reoriented(a)))?;
        ensure!(*hits[0] == f, "the fitting filtration of {a:?} is not its active filtration");
    }
    Ok(())
}

/// Runs every check on `g` with its stored orientation as reference.
pub fn verify_graph(g: &OrderedGraph, opts: &VerifyOptions) -> Vec<Check> {
    let report = |name, r: Outcome| Check {
        name,
        failure: r.err(),
    };
    let mut out = vec![
        report(ORTHOGONALITY, orthogonality(g, opts.corrupt_signs)),
        report(TUTTE, tutte_four_way(g)),
        report(BETA, beta_check(g)),
    ];
    let cx = match Ctx::new(g) {
        Ok(cx) => cx,
        Err(e) => {
            for name in CHECKS {
                if !out.iter().any(|c| c.name == *name) {
                    out.push(report(name, Err(e.clone())));
                }
            }
            out.sort_by_key(|c| CHECKS.iter().position(|n| *n == c.name));
            return out;
        }
    };
    let mut engine = DeletionContraction::new(g);
    out.push(report(CRAPO, crapo(&cx)));
    out.push(report(FOUR_VAR, four_var(&cx)));
    out.push(report(CLASSES, classes(&cx)));
    out.push(report(TRANSPORT, transport(&cx)));
    out.push(report(REPRESENTATIVES, representatives(&cx)));
    out.push(report(REFINED, refined(&cx)));
    out.push(report(ROUTE_DC, route_dc(&cx, &mut engine)));
    out.push(report(ROUTE_UNIACTIVE, route_uniactive(&cx, &mut engine)));
    out.push(report(ROUTE_REFINED, route_refined(&cx, &mut engine)));
    out.push(report(ROUTE_FILTRATION, route_filtration(&cx)));
    out.push(report(ROUND_TRIP_PREIMAGES, round_trip_preimages(&cx)));
    out.push(report(ROUND_TRIP_REFINED, round_trip_refined(&cx)));
    out.push(report(RESTRICTIONS, restrictions(&cx)));
    out.push(report(CRITERION_UNIQUE, criterion_unique(&cx)));
    out.push(report(
        FILTRATION_UNIQUE,
        filtration_unique(&cx, opts.filtration_enum_max_edges),
    ));
    out.sort_by_key(|c| CHECKS.iter().position(|n| *n == c.name));
    out
}

/// Per-check totals over a batch of graphs.
#[derive(Clone, Debug)]
pub struct Summary {
    pub name: &'static str,
    pub graphs: usize,
    pub failed: usize,
    /// The first failure, with the index of its graph.
    pub first_failure: Option<(usize, String)>,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

/// Runs [`verify_graph`] on every graph, in parallel.
pub fn verify_batch(graphs: &[OrderedGraph], opts: &VerifyOptions) -> Vec<Summary> {
    let reports: Vec<Vec<Check>> = graphs.par_iter().map(|g| verify_graph(g, opts)).collect();
    CHECKS
        .iter()
        .map(|&name| {
            let mut s = Summary {
                name,
                graphs: graphs.len(),
                failed: 0,
                first_failure: None,
            };
            for (i, r) in reports.iter().enumerate() {
                if let Some(c) = r.iter().find(|c| c.name == name) {
                    if let Some(f) = &c.failure {
                        s.failed += 1;
                        s.first_failure.get_or_insert((i, f.clone()));
                    }
                }
            }
            s
        })
        .collect()
}
