//! Brute-force oracles, independent of the solver code paths they check.
#![allow(dead_code)]

use hereditary_core::{Graph, HereditaryHypergraph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every set partition of `set`, each block listed once.
pub fn set_partitions(set: VertexSet) -> Vec<Vec<VertexSet>> {
    fn go(rest: VertexSet, cur: &mut Vec<VertexSet>, out: &mut Vec<Vec<VertexSet>>) {
        let Some(v) = rest.min() else {
            out.push(cur.clone());
            return;
        };
        let others = rest.without(v);
        for sub in others.subsets() {
            let block = sub.with(v);
            cur.push(block);
            go(rest.difference(block), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(set, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `V(h)` whose blocks are all hyperedges, checked against the
/// generator list directly.
pub fn hyperedge_partitions(h: &HereditaryHypergraph) -> Vec<Vec<VertexSet>> {
    set_partitions(h.vertices())
        .into_iter()
        .filter(|p| p.iter().all(|b| h.generators().iter().any(|g| b.is_subset(*g))))
        .collect()
}

pub fn brute_rho(h: &HereditaryHypergraph) -> usize {
    hyperedge_partitions(h).iter().map(|p| p.len()).min().unwrap_or(0)
}

pub fn non_singleton_vertices(p: &[VertexSet]) -> usize {
    p.iter().filter(|b| b.len() >= 2).map(|b| b.len()).sum()
}

/// (μ over all partitions, μ over minimum partitions)
pub fn brute_mu(h: &HereditaryHypergraph) -> (usize, usize) {
    let parts = hyperedge_partitions(h);
    let r = parts.iter().map(|p| p.len()).min().unwrap_or(0);
    let all = parts.iter().map(|p| non_singleton_vertices(p)).max().unwrap_or(0);
    let min = parts.iter().filter(|p| p.len() == r).map(|p| non_singleton_vertices(p)).max().unwrap_or(0);
    (all, min)
}

/// Maximum matching size by exhaustive recursion on the lowest vertex.
pub fn brute_nu(g: &Graph) -> usize {
    fn go(g: &Graph, rest: VertexSet) -> usize {
        let Some(v) = rest.min() else { return 0 };
        let r = rest.without(v);
        let mut best = go(g, r);
        for u in r.iter().filter(|&u| g.has_edge(u, v)) {
            best = best.max(1 + go(g, r.without(u)));
        }
        best
    }
    go(g, g.vertices())
}

/// Chromatic number by trying k = 1, 2, ... with plain backtracking.
pub fn brute_chromatic(g: &Graph) -> usize {
    fn colour(g: &Graph, order: &[usize], i: usize, k: usize, col: &mut Vec<usize>) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let used = order[..i].iter().map(|&u| col[u] + 1).max().unwrap_or(0);
        for c in 0..k.min(used + 1) {
            if order[..i].iter().all(|&u| !g.has_edge(u, v) || col[u] != c) {
                col[v] = c;
                if colour(g, order, i + 1, k, col) {
                    return true;
                }
            }
        }
        col[v] = usize::MAX;
        false
    }
    let order: Vec<usize> = g.vertices().iter().collect();
    if order.is_empty() {
        return 0;
    }
    (1..=order.len())
        .find(|&k| {
            let mut col = vec![usize::MAX; g.label_bound()];
            colour(g, &order, 0, k, &mut col)
        })
        .unwrap()
}

/// G(n, p) with a fixed seed stream.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
