//! Test graphs: every small connected multigraph up to isomorphism, and
//! seeded random multigraphs.

use std::collections::BTreeSet;

use active_bijection::OrderedGraph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type EdgeList = Vec<(usize, usize)>;

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut parts = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            parts -= 1;
        }
    }
    parts == 1
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn canonical(edges: &[(usize, usize)], perms: &[Vec<usize>]) -> EdgeList {
    let mut best: Option<EdgeList> = None;
    let mut buf = Vec::with_capacity(edges.len());
    for p in perms {
        buf.clear();
        buf.extend(edges.iter().map(|&(u, v)| {
            let (a, b) = (p[u], p[v]);
            (a.min(b), a.max(b))
        }));
        buf.sort_unstable();
        if best.as_ref().map_or(true, |b| buf < *b) {
            best = Some(buf.clone());
        }
    }
    best.unwrap_or_default()
}

/// Every connected multigraph, loops allowed, with `1..=max_vertices`
/// vertices and `1..=max_edges` edges, one per isomorphism class. Each is
/// returned with the edge list in its canonical order, directed from the
/// smaller vertex to the larger.
pub fn connected_multigraphs(max_vertices: usize, max_edges: usize) -> Vec<OrderedGraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let perms = permutations(n);
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u..n).map(move |v| (u, v)))
            .collect();
        let mut seen: BTreeSet<EdgeList> = BTreeSet::new();
        for m in 1..=max_edges {
            if m + 1 < n {
                continue;
            }
            // Multisets of `m` pair indices in nondecreasing order.
            let mut idx = vec![0usize; m];
            loop {
                let edges: EdgeList = idx.iter().map(|&i| pairs[i]).collect();
                if connected(n, &edges) {
                    seen.insert(canonical(&edges, &perms));
                }
                let Some(k) = (0..m).rev().find(|&k| idx[k] + 1 < pairs.len()) else {
                    break;
                };
                let next = idx[k] + 1;
                for slot in &mut idx[k..] {
                    *slot = next;
                }
            }
        }
        for edges in seen {
            out.push(OrderedGraph::new(n, &edges).expect("connected by construction"));
        }
    }
    out
}

/// `count` connected multigraphs with at most `max_edges` edges and random
/// edge order, directions, loops and parallel edges.
pub fn random_multigraphs(count: usize, seed: u64, max_edges: usize) -> Vec<OrderedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_edges = max_edges.max(1);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_edges.min(6));
            let m = rng.gen_range((n - 1).max(1)..=max_edges);
            let mut edges: EdgeList = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
            while edges.len() < m {
                let u = rng.gen_range(0..n);
                let v = if rng.gen_bool(0.15) { u } else { rng.gen_range(0..n) };
                edges.push((u, v));
            }
            edges.shuffle(&mut rng);
            for e in &mut edges {
                if rng.gen_bool(0.5) {
                    *e = (e.1, e.0);
                }
            }
            OrderedGraph::new(n, &edges).expect("contains a spanning tree")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_by_vertex_number() {
        let graphs = connected_multigraphs(5, 7);
        let mut counts = [0usize; 6];
        for g in &graphs {
            counts[g.ambient_vertex_count()] += 1;
        }
        assert_eq!(counts[1..], [7, 50, 187, 423, 509]);
        assert_eq!(graphs.len(), 1176);
    }

    #[test]
    fn small_counts() {
        // One or two loops; an edge, an edge with a loop, a double edge; a path.
        assert_eq!(connected_multigraphs(3, 2).len(), 2 + 3 + 1);
    }

    #[test]
    fn random_is_seeded() {
        let a = random_multigraphs(20, 7, 8);
        let b = random_multigraphs(20, 7, 8);
        assert_eq!(a, b);
        assert!(a.iter().all(|g| g.edge_count() <= 8 && g.is_connected()));
    }
}
