mod common;

use common::*;
use hereditary_core::families::{
    acyclic_family, bounded_class_family, clique_family, forbidden_subgraph_family, maximal_generators,
    stable_set_family, threshold_family, IndependenceOracle,
};
use hereditary_core::fixtures::*;
use hereditary_core::{rho, Digraph, Graph, VertexSet, WeightedGraph};
use rand::Rng;

fn agrees<O: IndependenceOracle>(o: &O) {
    let h = maximal_generators(o).unwrap();
    for x in o.vertices().subsets().filter(|x| !x.is_empty()) {
        assert_eq!(o.is_independent(x), h.is_hyperedge(x), "{x:?}");
    }
}

#[test]
fn oracle_and_antichain_agree() {
    let mut rng = rng(5);
    for _ in 0..60 {
        let n = rng.gen_range(1..=6);
        let g = random_graph(&mut rng, n, 0.5);
        agrees(&stable_set_family(&g));
        agrees(&clique_family(&g));
        agrees(&bounded_class_family(stable_set_family(&g), 2).unwrap());
        let mut d = Digraph::new(n).unwrap();
        for u in 0..n {
            for v in 0..n {
                if u != v && rng.gen_bool(0.4) {
                    d.add_arc(u, v).unwrap();
                }
            }
        }
        agrees(&acyclic_family(&d));
        let mut w = WeightedGraph::new(n).unwrap();
        for (u, v) in g.edges() {
            w.add_edge(u, v, rng.gen_range(0.0..2.0)).unwrap();
        }
        agrees(&threshold_family(&w, 1.5).unwrap());
    }
}

#[test]
fn chromatic_specialisation() {
    let mut rng = rng(31);
    for _ in 0..100 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        let h = maximal_generators(&stable_set_family(&g)).unwrap();
        assert_eq!(rho(&h), brute_chromatic(&g), "{g:?}");
    }
    assert_eq!(brute_chromatic(&cycle(5)), 3);
    assert_eq!(brute_chromatic(&petersen()), 3);
    assert_eq!(rho(&maximal_generators(&stable_set_family(&petersen())).unwrap()), 3);
}

#[test]
fn clique_stable_duality_and_connectivity() {
    let mut rng = rng(8);
    for _ in 0..80 {
        let n = rng.gen_range(1..=7);
        let g = random_graph(&mut rng, n, 0.45);
        let cliques = maximal_generators(&clique_family(&g)).unwrap();
        let stables = maximal_generators(&stable_set_family(&g)).unwrap();
        assert_eq!(cliques, maximal_generators(&stable_set_family(&g.complement())).unwrap());
        assert_eq!(stables.is_connected(), g.complement().is_connected());
        assert_eq!(cliques.is_connected(), g.is_connected());
    }
}

#[test]
fn forbidden_patterns_reproduce_the_named_families() {
    let single_edge = Graph::from_edges(2, &[(0, 1)]).unwrap();
    let non_edge = Graph::new(2).unwrap();
    let c5 = cycle(5);
    let a = maximal_generators(&forbidden_subgraph_family(&c5, &[single_edge]).unwrap()).unwrap();
    assert_eq!(a, maximal_generators(&stable_set_family(&c5)).unwrap());
    let b = maximal_generators(&forbidden_subgraph_family(&c5, &[non_edge]).unwrap()).unwrap();
    assert_eq!(b, maximal_generators(&clique_family(&c5)).unwrap());
}

/// Digraphs on 4 vertices with a directed Hamiltonian 4-cycle 0→1→2→3→0,
/// plus any subset of the remaining arcs.
fn four_cycle_digraphs() -> Vec<Digraph> {
    let base = [(0, 1), (1, 2), (2, 3), (3, 0)];
    let extra: Vec<(usize, usize)> =
        (0..4).flat_map(|u| (0..4).map(move |v| (u, v))).filter(|&(u, v)| u != v && !base.contains(&(u, v))).collect();
    (0u32..1 << extra.len())
        .map(|mask| {
            let mut arcs = base.to_vec();
            arcs.extend(extra.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, a)| *a));
            Digraph::from_arcs(4, &arcs).unwrap()
        })
        .collect()
}

#[test]
fn acyclic_family_from_cycle_patterns() {
    let two_cycle = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
    let mut forbidden = vec![two_cycle, directed_cycle(3)];
    forbidden.extend(four_cycle_digraphs());
    let mut rng = rng(12);
    for _ in 0..25 {
        let n = rng.gen_range(2..=5);
        let mut d = Digraph::new(n).unwrap();
        for u in 0..n {
            for v in 0..n {
                if u != v && rng.gen_bool(0.45) {
                    d.add_arc(u, v).unwrap();
                }
            }
        }
        let by_patterns = maximal_generators(&forbidden_subgraph_family(&d, &forbidden).unwrap()).unwrap();
        let direct = maximal_generators(&acyclic_family(&d)).unwrap();
        assert_eq!(by_patterns, direct, "{d:?}");
        // adding more cyclic patterns changes nothing
        let mut more = forbidden.clone();
        more.push(directed_cycle(5));
        more.push(complete_digraph(3));
        let extended = maximal_generators(&forbidden_subgraph_family(&d, &more).unwrap()).unwrap();
        assert_eq!(extended, direct);
    }
    let t = directed_cycle(3);
    let fam = maximal_generators(&forbidden_subgraph_family(&t, &forbidden).unwrap()).unwrap();
    assert_eq!(fam.generators().len(), 3);
}

#[test]
fn threshold_with_zero_lambda_is_stable_sets() {
    let c4 = cycle(4);
    let w = WeightedGraph::uniform(&c4, 1.0).unwrap();
    assert_eq!(
        maximal_generators(&threshold_family(&w, 0.0).unwrap()).unwrap(),
        maximal_generators(&stable_set_family(&c4)).unwrap()
    );
    let g = petersen();
    let w = WeightedGraph::uniform(&g, 0.5).unwrap();
    assert_eq!(rho(&maximal_generators(&threshold_family(&w, w.total_weight()).unwrap()).unwrap()), 1);
}

#[test]
fn matroid_circuits_of_u23() {
    // circuits of the rank-1 uniform matroid on 3 elements are the three pairs
    use hereditary_core::ExplicitHypergraph;
    let e = ExplicitHypergraph::new(3, vec![VertexSet::from([0, 1]), VertexSet::from([0, 2]), VertexSet::from([1, 2])])
        .unwrap();
    let o = e.stable_sets();
    for s in VertexSet::full(3).subsets() {
        let contains_circuit = [[0, 1], [0, 2], [1, 2]].iter().any(|c| s.contains(c[0]) && s.contains(c[1]));
        assert_eq!(o.is_independent(s), !contains_circuit);
        assert_eq!(o.is_independent(s), s.len() <= 1);
    }
}
