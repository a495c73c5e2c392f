//! Named graphs and digraphs used throughout the examples and tests.

use alloc::vec::Vec;

use crate::graph::{Digraph, Graph};

/// Cycle `C_n` (`n ≥ 3`) on `0..n`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("valid cycle")
}

/// Path `P_n` on `n` vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("valid path")
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n).expect("n <= 64").complement()
}

pub fn edgeless(n: usize) -> Graph {
    Graph::new(n).expect("n <= 64")
}

/// Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("valid Petersen graph")
}

/// Friendship graph `F_k`: `k` triangles sharing vertex 0.
pub fn friendship(k: usize) -> Graph {
    let mut edges = Vec::new();
    for t in 0..k {
        let (a, b) = (2 * t + 1, 2 * t + 2);
        edges.extend([(0, a), (0, b), (a, b)]);
    }
    Graph::from_edges(2 * k + 1, &edges).expect("valid friendship graph")
}

/// Triangular prism: triangles `{0,1,2}` and `{3,4,5}` joined by `i — i+3`.
pub fn prism() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
        .expect("valid prism")
}

/// Directed cycle `0 → 1 → … → n-1 → 0`.
pub fn directed_cycle(n: usize) -> Digraph {
    let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Digraph::from_arcs(n, &arcs).expect("valid directed cycle")
}

/// Every ordered pair is an arc (all pairs are 2-cycles).
pub fn complete_digraph(n: usize) -> Digraph {
    let arcs: Vec<_> = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    Digraph::from_arcs(n, &arcs).expect("valid complete digraph")
}

/// Acyclic tournament with arcs `i → j` for `i < j`.
pub fn transitive_tournament(n: usize) -> Digraph {
    let arcs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Digraph::from_arcs(n, &arcs).expect("valid tournament")
}
