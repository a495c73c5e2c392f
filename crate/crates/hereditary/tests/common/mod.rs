//! Independent brute-force oracles for the acceptance and CLI suites.
#![allow(dead_code)]

use hereditary_core::{Digraph, Graph, HereditaryHypergraph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every set partition of `set`.
pub fn set_partitions(set: VertexSet) -> Vec<Vec<VertexSet>> {
    fn go(rest: VertexSet, cur: &mut Vec<VertexSet>, out: &mut Vec<Vec<VertexSet>>) {
        let Some(v) = rest.min() else {
            out.push(cur.clone());
            return;
        };
        for sub in rest.without(v).subsets() {
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

/// Smallest partition of `V(h)` into blocks each contained in a generator.
pub fn brute_rho(h: &HereditaryHypergraph) -> usize {
    set_partitions(h.vertices())
        .into_iter()
        .filter(|p| p.iter().all(|b| h.generators().iter().any(|g| b.is_subset(*g))))
        .map(|p| p.len())
        .min()
        .unwrap_or(0)
}

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

/// Smallest k admitting a proper colouring, by exhaustive assignment.
pub fn brute_chromatic(g: &Graph) -> usize {
    let vs: Vec<usize> = g.vertices().iter().collect();
    if vs.is_empty() {
        return 0;
    }
    fn fits(g: &Graph, vs: &[usize], i: usize, k: usize, col: &mut [usize]) -> bool {
        if i == vs.len() {
            return true;
        }
        for c in 0..k {
            if (0..i).all(|j| col[j] != c || !g.has_edge(vs[j], vs[i])) {
                col[i] = c;
                if fits(g, vs, i + 1, k, col) {
                    return true;
                }
            }
        }
        false
    }
    (1..=vs.len()).find(|&k| fits(g, &vs, 0, k, &mut vec![0; vs.len()])).unwrap()
}

/// Directed cycle test by three-colour depth-first search.
pub fn has_directed_cycle(d: &Digraph, set: VertexSet) -> bool {
    fn dfs(d: &Digraph, set: VertexSet, v: usize, state: &mut [u8]) -> bool {
        state[v] = 1;
        for w in set.iter().filter(|&w| d.arcs().any(|a| a == (v, w))) {
            if state[w] == 1 || (state[w] == 0 && dfs(d, set, w, state)) {
                return true;
            }
        }
        state[v] = 2;
        false
    }
    let mut state = vec![0u8; d.label_bound()];
    set.iter().any(|v| state[v] == 0 && dfs(d, set, v, &mut state))
}

/// Fewest parts in a partition into sets inducing acyclic subdigraphs.
pub fn brute_dichromatic(d: &Digraph) -> usize {
    set_partitions(d.vertices())
        .into_iter()
        .filter(|p| p.iter().all(|b| !has_directed_cycle(d, *b)))
        .map(|p| p.len())
        .min()
        .unwrap_or(0)
}

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

pub fn random_digraph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Digraph {
    let mut d = Digraph::new(n).unwrap();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                d.add_arc(u, v).unwrap();
            }
        }
    }
    d
}

/// Every orientation of `K_n`.
pub fn tournaments(n: usize) -> Vec<Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let arcs: Vec<(usize, usize)> =
                pairs.iter().enumerate().map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) }).collect();
            Digraph::from_arcs(n, &arcs).unwrap()
        })
        .collect()
}
