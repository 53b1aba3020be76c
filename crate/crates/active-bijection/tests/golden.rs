//! The K3 and K4 tables of the active bijection, with the stored edge
//! directions as reference orientation.

use active_bijection::bijection::{alpha, alpha_dc, tree_active_data};
use active_bijection::filtration::{active_filtration, active_partition, activity_class};
use active_bijection::tutte::{
    beta, convolution, tutte_by_filtrations, tutte_by_orientations, tutte_by_trees,
};
use active_bijection::{Digraph, EdgeSet, OrderedGraph};

fn k3() -> OrderedGraph {
    OrderedGraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()
}

fn k4() -> OrderedGraph {
    OrderedGraph::new(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]).unwrap()
}

struct Row {
    tree: &'static [usize],
    filtration: &'static str,
    partition: &'static [&'static [usize]],
    listed: &'static [&'static [usize]],
}

const K3_ROWS: &[Row] = &[
    Row {
        tree: &[1, 2],
        filtration: "[∅] ⊂ 1 ⊂ 123",
        partition: &[&[1], &[2, 3]],
        listed: &[&[], &[2, 3], &[1], &[1, 2, 3]],
    },
    Row {
        tree: &[1, 3],
        filtration: "[∅] ⊂ 123",
        partition: &[&[1, 2, 3]],
        listed: &[&[3], &[1, 2]],
    },
    Row {
        tree: &[2, 3],
        filtration: "∅ ⊂ [123]",
        partition: &[&[1, 2, 3]],
        listed: &[&[2], &[1, 3]],
    },
];

// Members are listed up to opposites.
const K4_ROWS: &[Row] = &[
    Row {
        tree: &[1, 2, 4],
        filtration: "[∅] ⊂ 1 ⊂ 123 ⊂ 123456",
        partition: &[&[1], &[2, 3], &[4, 5, 6]],
        listed: &[&[], &[2, 3], &[4, 5, 6], &[2, 3, 4, 5, 6]],
    },
    Row {
        tree: &[1, 2, 6],
        filtration: "[∅] ⊂ 1 ⊂ 123456",
        partition: &[&[1], &[2, 3, 4, 5, 6]],
        listed: &[&[6], &[2, 3, 4, 5]],
    },
    Row {
        tree: &[1, 2, 5],
        filtration: "[∅] ⊂ 145 ⊂ 123456",
        partition: &[&[1, 4, 5], &[2, 3, 6]],
        listed: &[&[5, 6], &[2, 3, 5]],
    },
    Row {
        tree: &[1, 3, 4],
        filtration: "[∅] ⊂ 123 ⊂ 123456",
        partition: &[&[1, 2, 3], &[4, 5, 6]],
        listed: &[&[3, 4, 5, 6], &[3]],
    },
    Row {
        tree: &[1, 3, 5],
        filtration: "[∅] ⊂ 123456",
        partition: &[&[1, 2, 3, 4, 5, 6]],
        listed: &[&[3, 5, 6]],
    },
    Row {
        tree: &[1, 3, 6],
        filtration: "[∅] ⊂ 123456",
        partition: &[&[1, 2, 3, 4, 5, 6]],
        listed: &[&[3, 5]],
    },
    Row {
        tree: &[2, 3, 4],
        filtration: "∅ ⊂ [123] ⊂ 123456",
        partition: &[&[1, 2, 3], &[4, 5, 6]],
        listed: &[&[2], &[2, 4, 5, 6]],
    },
    Row {
        tree: &[2, 4, 5],
        filtration: "∅ ⊂ [145] ⊂ 123456",
        partition: &[&[1, 4, 5], &[2, 3, 6]],
        listed: &[&[2, 3, 4], &[4, 6]],
    },
    Row {
        tree: &[1, 4, 6],
        filtration: "∅ ⊂ [246] ⊂ 123456",
        partition: &[&[1, 3, 5], &[2, 4, 6]],
        listed: &[&[3, 4], &[2, 3, 6]],
    },
    Row {
        tree: &[1, 5, 6],
        filtration: "∅ ⊂ [356] ⊂ 123456",
        partition: &[&[1, 2, 4], &[3, 5, 6]],
        listed: &[&[5], &[3, 6]],
    },
    Row {
        tree: &[2, 3, 5],
        filtration: "∅ ⊂ [123456]",
        partition: &[&[1, 2, 3, 4, 5, 6]],
        listed: &[&[2, 4]],
    },
    Row {
        tree: &[2, 3, 6],
        filtration: "∅ ⊂ [123456]",
        partition: &[&[1, 2, 3, 4, 5, 6]],
        listed: &[&[2, 4, 6]],
    },
    Row {
        tree: &[3, 4, 6],
        filtration: "∅ ⊂ 246 ⊂ [123456]",
        partition: &[&[1, 3, 5], &[2, 4, 6]],
        listed: &[&[2, 6], &[4]],
    },
    Row {
        tree: &[2, 5, 6],
        filtration: "∅ ⊂ 356 ⊂ [123456]",
        partition: &[&[1, 2, 4], &[3, 5, 6]],
        listed: &[&[2, 3, 4, 6], &[2, 4, 5]],
    },
    Row {
        tree: &[3, 4, 5],
        filtration: "∅ ⊂ 23456 ⊂ [123456]",
        partition: &[&[1], &[2, 3, 4, 5, 6]],
        listed: &[&[2, 5, 6], &[3, 4]],
    },
    Row {
        tree: &[4, 5, 6],
        filtration: "∅ ⊂ 356 ⊂ 23456 ⊂ [123456]",
        partition: &[&[1], &[2, 4], &[3, 5, 6]],
        listed: &[&[3, 4, 6], &[2, 3, 6], &[2, 5], &[4, 5]],
    },
];

/// Listed K4 members that the table attaches to a different tree than
/// `alpha`: `(tree in the table, member, tree computed)`.
const K4_ERRATA: &[(&[usize], &[usize], &[usize])] = &[
    (&[1, 3, 5], &[3, 5, 6], &[1, 3, 6]),
    (&[1, 3, 6], &[3, 5], &[1, 3, 5]),
    (&[2, 3, 5], &[2, 4], &[2, 3, 6]),
    (&[2, 3, 6], &[2, 4, 6], &[2, 3, 5]),
    (&[1, 4, 6], &[3, 4], &[3, 4, 5]),
    (&[1, 4, 6], &[2, 3, 6], &[4, 5, 6]),
];

fn is_erratum(tree: EdgeSet, member: EdgeSet) -> bool {
    K4_ERRATA
        .iter()
        .any(|(t, m, _)| EdgeSet::of(t) == tree && EdgeSet::of(m) == member)
}

fn check_rows(g: &OrderedGraph, rows: &[Row], skip_errata: bool) -> usize {
    let d = Digraph::new(g.clone());
    let e = g.edges();
    let trees = g.spanning_trees().unwrap();
    assert_eq!(trees.len(), rows.len());
    let mut verbatim = 0;
    for row in rows {
        let t = EdgeSet::of(row.tree);
        assert!(trees.contains(&t), "{t:?}");
        let data = tree_active_data(g, t, None).unwrap();
        let expected_parts: Vec<EdgeSet> = row.partition.iter().map(|p| EdgeSet::of(p)).collect();
        let mut parts: Vec<EdgeSet> = data.partition.parts.iter().map(|p| p.edges).collect();
        parts.sort();
        let mut want = expected_parts.clone();
        want.sort();
        assert_eq!(parts, want, "partition of {t:?}");
        assert_eq!(data.preimages.len(), 1 << row.partition.len());

        let rep = data.preimages[0];
        let f = active_filtration(&d.reoriented(rep)).unwrap();
        assert_eq!(f.to_string(), row.filtration, "filtration of {t:?}");
        assert_eq!(active_partition(&d.reoriented(rep)).unwrap(), data.partition);
        let class = activity_class(&d.reoriented(rep)).unwrap();
        assert_eq!(class.members(), data.preimages);

        for m in row.listed {
            let m = EdgeSet::of(m);
            if skip_errata && is_erratum(t, m) {
                continue;
            }
            assert!(data.preimages.contains(&m), "{m:?} not mapped to {t:?}");
            assert!(data.preimages.contains(&(e ^ m)), "opposite of {m:?}");
            assert_eq!(alpha(&d.reoriented(m)).unwrap(), t);
            assert_eq!(alpha_dc(&d.reoriented(m)).unwrap(), t);
            verbatim += 1;
        }
    }
    verbatim
}

#[test]
fn k3_table() {
    assert_eq!(check_rows(&k3(), K3_ROWS, false), 8);
}

#[test]
fn k3_class_sizes() {
    let g = k3();
    let sizes: Vec<usize> = K3_ROWS
        .iter()
        .map(|r| tree_active_data(&g, EdgeSet::of(r.tree), None).unwrap().preimages.len())
        .collect();
    assert_eq!(sizes, vec![4, 2, 2]);
}

#[test]
fn k4_table() {
    assert_eq!(check_rows(&k4(), K4_ROWS, true), 26);
}

/// `e` and the smallest edge of `s` have opposite signs in `d`.
fn opposed(d: &Digraph, s: &active_bijection::SignedEdgeSet, e: active_bijection::EdgeId) -> bool {
    let s = d.signs(s);
    let a = s.support().min_edge().unwrap();
    a != e && s.sign(a) != s.sign(e)
}

/// The sign criterion for a fully optimal tree, written out from the
/// definition with `p` the smallest edge.
fn fully_optimal(d: &Digraph, t: EdgeSet, cyclic: bool) -> bool {
    let g = d.graph();
    let p = g.edges().min_edge().unwrap();
    g.edges().iter().all(|e| {
        if t.contains(e) {
            (!cyclic && e == p) || opposed(d, &g.fundamental_cocycle(t, e).unwrap(), e)
        } else {
            (cyclic && e == p) || opposed(d, &g.fundamental_cycle(t, e).unwrap(), e)
        }
    })
}

#[test]
fn k4_errata_contradict_the_criterion() {
    let g = k4();
    let d = Digraph::new(g.clone());
    let p = g.edges().min_edge().unwrap();
    for &(listed, member, computed) in &K4_ERRATA[..4] {
        let o = d.reoriented(EdgeSet::of(member));
        let cyclic = !o.is_bipolar(p).unwrap();
        assert!(cyclic == o.is_cyclic_bipolar(p).unwrap());
        assert!(!fully_optimal(&o, EdgeSet::of(listed), cyclic));
        assert!(fully_optimal(&o, EdgeSet::of(computed), cyclic));
        let hits = g
            .spanning_trees()
            .unwrap()
            .into_iter()
            .filter(|&t| fully_optimal(&o, t, cyclic))
            .count();
        assert_eq!(hits, 1);
    }
    // The last two are listed under a second tree as well.
    for &(listed, member, computed) in &K4_ERRATA[4..] {
        let owner = K4_ROWS
            .iter()
            .find(|r| r.tree == computed)
            .unwrap();
        assert!(owner.listed.contains(&member));
        assert_ne!(listed, computed);
    }
}

#[test]
fn tutte_polynomials() {
    for (g, s) in [
        (k3(), "x^2+x+y"),
        (k4(), "x^3+3x^2+2x+4xy+2y+3y^2+y^3"),
    ] {
        assert_eq!(tutte_by_trees(&g).unwrap().to_string(), s);
        assert_eq!(tutte_by_orientations(&g).unwrap().to_string(), s);
        assert_eq!(tutte_by_filtrations(&g).unwrap().to_string(), s);
        assert_eq!(convolution(&g).unwrap().to_string(), s);
    }
    assert_eq!(beta(&k4()).unwrap(), 2);
}

#[test]
fn k4_reference_is_tree_124() {
    let g = k4();
    let d = Digraph::new(g.clone());
    assert_eq!(alpha(&d).unwrap(), EdgeSet::of(&[1, 2, 4]));
    assert_eq!(alpha(&d.opposite()).unwrap(), EdgeSet::of(&[1, 2, 4]));
    assert_eq!(active_partition(&d).unwrap().to_string(), "1+23+456");
}
