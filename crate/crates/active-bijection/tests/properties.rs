//! Invariants on random small multigraphs with random reorientations.

use active_bijection::activity::{
    locate_interval, orientation_activities, subset_activities, tree_activities,
};
use active_bijection::bijection::{
    alpha, alpha_dc, alpha_dc_refined, alpha_refined, alpha_uniactive, tree_active_data,
    tree_active_filtration,
};
use active_bijection::filtration::{
    active_filtration, activity_class, enumerate_connected_filtrations, is_connected_filtration,
    PartKind,
};
use active_bijection::tutte::{
    beta, beta_star, convolution, tutte_by_filtrations, tutte_by_orientations, tutte_by_trees,
    TuttePoly,
};
use active_bijection::{Digraph, EdgeKind, EdgeSet, OrderedGraph};
use proptest::prelude::*;

/// A connected multigraph on at most 4 vertices with at most `max_edges`
/// edges, in random order and with random directions.
fn graph(max_edges: usize) -> impl Strategy<Value = OrderedGraph> {
    (1usize..=4)
        .prop_flat_map(move |n| {
            let extra = max_edges - (n - 1).max(1) + 1;
            (
                Just(n),
                proptest::collection::vec(0usize..64, n - 1),
                proptest::collection::vec((0..n, 0..n), (n == 1) as usize..extra),
                proptest::collection::vec(any::<(u32, bool)>(), max_edges),
            )
        })
        .prop_map(|(n, parents, extra, keys)| {
            let mut edges: Vec<(usize, usize)> =
                (1..n).map(|v| (parents[v - 1] % v, v)).chain(extra).collect();
            let mut keyed: Vec<_> = edges.drain(..).zip(keys).collect();
            keyed.sort_by_key(|(_, (k, _))| *k);
            let edges: Vec<(usize, usize)> = keyed
                .into_iter()
                .map(|((u, v), (_, flip))| if flip { (v, u) } else { (u, v) })
                .collect();
            OrderedGraph::new(n, &edges).unwrap()
        })
}

fn with_subset(max_edges: usize) -> impl Strategy<Value = (OrderedGraph, EdgeSet)> {
    (graph(max_edges), any::<u64>()).prop_map(|(g, bits)| {
        let a = EdgeSet::from_bits(bits) & g.edges();
        (g, a)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn orthogonality_and_membership_duality(g in graph(7)) {
        for c in g.signed_cycles().unwrap() {
            for d in g.signed_cocycles().unwrap() {
                let inter = c.support() & d.support();
                let agree = (c.positive & d.positive) | (c.negative & d.negative);
                prop_assert_eq!(2 * agree.len(), inter.len());
            }
        }
        for t in g.spanning_trees().unwrap() {
            for b in t {
                for e in g.edges() - t {
                    let c = g.fundamental_cycle(t, e).unwrap();
                    let d = g.fundamental_cocycle(t, b).unwrap();
                    prop_assert!(c.support().contains(e) && d.support().contains(b));
                    prop_assert_eq!(c.support().contains(b), d.support().contains(e));
                }
            }
        }
    }

    #[test]
    fn minor_rules((g, f) in with_subset(7)) {
        let inside: Vec<EdgeSet> = g.all_cycles().unwrap().into_iter().filter(|c| c.is_subset(f)).collect();
        prop_assert_eq!(g.restrict(f).unwrap().all_cycles().unwrap(), inside);
        let outside: Vec<EdgeSet> = g.all_cocycles().unwrap().into_iter().filter(|c| c.is_disjoint(f)).collect();
        prop_assert_eq!(g.contract(f).unwrap().all_cocycles().unwrap(), outside);
    }

    #[test]
    fn tutte_four_ways_and_deletion_contraction(g in graph(7)) {
        let t = tutte_by_trees(&g).unwrap();
        prop_assert_eq!(&t, &tutte_by_orientations(&g).unwrap());
        prop_assert_eq!(&t, &tutte_by_filtrations(&g).unwrap());
        prop_assert_eq!(&t, &convolution(&g).unwrap());
        prop_assert_eq!(t.eval(1, 1), g.spanning_trees().unwrap().len() as i128);
        let e = g.edges().max_edge().unwrap();
        let one = EdgeSet::singleton(e);
        let expected = match g.classify_edge(e).unwrap() {
            EdgeKind::Loop => &TuttePoly::monomial(0, 1, 1) * &tutte_by_trees(&g.delete(one).unwrap()).unwrap(),
            EdgeKind::Isthmus => &TuttePoly::monomial(1, 0, 1) * &tutte_by_trees(&g.contract(one).unwrap()).unwrap(),
            EdgeKind::Ordinary => &tutte_by_trees(&g.delete(one).unwrap()).unwrap()
                + &tutte_by_trees(&g.contract(one).unwrap()).unwrap(),
        };
        prop_assert_eq!(t, expected);
    }

    #[test]
    fn beta_detects_2_connectivity(g in graph(7)) {
        if g.edge_count() >= 2 {
            prop_assert_eq!(beta(&g).unwrap() != 0, g.is_2connected_loopless());
        }
    }

    #[test]
    fn orientation_activities_basics((g, a) in with_subset(7)) {
        let d = Digraph::with_reorientation(g.clone(), a).unwrap();
        let acts = d.activity_sets().unwrap();
        prop_assert_eq!(acts, d.opposite().activity_sets().unwrap());
        prop_assert_eq!(d.is_acyclic().unwrap(), acts.active.is_empty());
        prop_assert_eq!(d.is_strongly_connected().unwrap(), acts.dual_active.is_empty());
        let cyc = d.cyclic_part().unwrap();
        let cocyc = d.directed_cocycles().unwrap().iter().fold(EdgeSet::EMPTY, |x, c| x | *c);
        prop_assert!(cyc.is_disjoint(cocyc));
        prop_assert_eq!(cyc | cocyc, g.edges());
    }

    #[test]
    fn subset_activities_and_rank((g, a) in with_subset(7)) {
        let t = locate_interval(&g, a).unwrap();
        let acts = tree_activities(&g, t).unwrap();
        prop_assert!((t - acts.internal).is_subset(a) && a.is_subset(t | acts.external));
        let s = subset_activities(&g, a).unwrap();
        let r = g.rank_of(a).unwrap();
        prop_assert_eq!(s.p.len(), g.rank() - r);
        prop_assert_eq!(s.q.len(), a.len() - r);
    }

    #[test]
    fn bijection_laws((g, a) in with_subset(7)) {
        let reference = Digraph::new(g.clone());
        let d = reference.reoriented(a);
        let t = alpha(&d).unwrap();
        let acts = d.activity_sets().unwrap();
        let ta = tree_activities(&g, t).unwrap();
        prop_assert_eq!(ta.internal, acts.dual_active);
        prop_assert_eq!(ta.external, acts.active);
        prop_assert_eq!(t, alpha_dc(&d).unwrap());
        let class = activity_class(&d).unwrap();
        prop_assert_eq!(class.len(), 1 << (acts.active.len() + acts.dual_active.len()));
        for m in class.members() {
            prop_assert_eq!(alpha(&reference.reoriented(m)).unwrap(), t);
        }
        let data = tree_active_data(&g, t, None).unwrap();
        prop_assert_eq!(data.preimages, class.members());

        let x = alpha_refined(&reference, a).unwrap();
        prop_assert_eq!(x, alpha_dc_refined(&reference, a).unwrap());
        let s = subset_activities(&g, x).unwrap();
        let o = orientation_activities(&reference, a).unwrap();
        prop_assert_eq!((s.int_, s.p, s.ext, s.q), (o.theta_star, o.theta_star_bar, o.theta, o.theta_bar));
        let back = tree_active_data(&g, locate_interval(&g, x).unwrap(), Some((&reference, x))).unwrap();
        prop_assert_eq!(back.refined_preimage, Some(a));
    }

    #[test]
    fn filtration_routes_agree((g, a) in with_subset(7)) {
        let d = Digraph::with_reorientation(g.clone(), a).unwrap();
        let f = active_filtration(&d).unwrap();
        prop_assert!(is_connected_filtration(&g, &f).unwrap());
        prop_assert_eq!(tree_active_filtration(&g, alpha(&d).unwrap()).unwrap(), f);
    }

    #[test]
    fn filtration_restricts_to_minors((g, a) in with_subset(7)) {
        let d = Digraph::with_reorientation(g.clone(), a).unwrap();
        let f = active_filtration(&d).unwrap();
        for (chain, cyclic) in [(&f.chain_acyclic, false), (&f.chain_cyclic, true)] {
            for i in 0..chain.len() {
                for j in i + 1..chain.len() {
                    let (lo, hi) = (chain[i], chain[j]);
                    let sub = active_filtration(&d.minor(hi, lo).unwrap()).unwrap();
                    let shifted: Vec<EdgeSet> = chain[i..=j].iter().map(|s| *s - lo).collect();
                    if cyclic {
                        prop_assert_eq!(&sub.chain_cyclic, &shifted);
                        prop_assert_eq!(sub.chain_acyclic.len(), 1);
                    } else {
                        prop_assert_eq!(&sub.chain_acyclic, &shifted);
                        prop_assert_eq!(sub.chain_cyclic.len(), 1);
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn filtrations_count_orientations(g in graph(6)) {
        let mut total = 0u64;
        for f in enumerate_connected_filtrations(&g).unwrap() {
            let mut n = 1u64;
            for (m, kind) in f.minors(&g).unwrap() {
                n *= 2 * match kind {
                    PartKind::Acyclic => beta(&m).unwrap(),
                    PartKind::Cyclic => beta_star(&m).unwrap(),
                };
            }
            total += n;
        }
        prop_assert_eq!(total, 1u64 << g.edge_count());
    }

    #[test]
    fn uniactive_bijection(g in graph(6)) {
        let p = g.edges().min_edge().unwrap();
        let reference = Digraph::new(g.clone());
        let mut bipolar = Vec::new();
        let mut cyclic = 0u64;
        for a in g.edges().subsets().filter(|a| !a.contains(p)) {
            let d = reference.reoriented(a);
            if d.is_bipolar(p).unwrap() {
                bipolar.push(alpha_uniactive(&d).unwrap());
            }
            if d.is_cyclic_bipolar(p).unwrap() {
                cyclic += 1;
            }
        }
        for &t in &bipolar {
            let acts = tree_activities(&g, t).unwrap();
            prop_assert_eq!((acts.internal.len(), acts.external.len()), (1, 0));
        }
        let n = bipolar.len() as u64;
        bipolar.sort();
        bipolar.dedup();
        prop_assert_eq!(bipolar.len() as u64, n);
        prop_assert_eq!(n, beta(&g).unwrap());
        prop_assert_eq!(cyclic, beta_star(&g).unwrap());
    }
}
