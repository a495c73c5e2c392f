mod common;

use common::*;
use hereditary_core::universe::{enumerate_hereditary, GeneratorConfig};
use hereditary_core::{
    enumerate_min_covers, has_singleton_free_min_cover, min_cover, mu, rho, rho_after_each_deletion,
    rho_closure_invariance_check, ExplicitHypergraph, HereditaryHypergraph, VertexSet, DEFAULT_ENUMERATION_LIMIT,
};
use rand::Rng;

fn small_universe() -> Vec<HereditaryHypergraph> {
    (1..=5).flat_map(|n| enumerate_hereditary(n).unwrap()).collect()
}

fn random_universe() -> Vec<HereditaryHypergraph> {
    (1..=8).flat_map(|n| GeneratorConfig::random(n, 1000 + n as u64, 63).instances().unwrap()).take(500).collect()
}

#[test]
fn min_cover_matches_partition_oracle_exhaustively() {
    for h in small_universe() {
        let c = min_cover(&h);
        assert!(c.is_partition_of(&h), "{h:?}");
        assert_eq!(c.len(), brute_rho(&h), "{h:?}");
    }
}

#[test]
fn min_cover_matches_partition_oracle_on_random_instances() {
    let u = random_universe();
    assert_eq!(u.len(), 500);
    for h in u {
        let c = min_cover(&h);
        assert!(c.is_partition_of(&h), "{h:?}");
        assert_eq!(c.len(), brute_rho(&h), "{h:?}");
    }
}

#[test]
fn enumeration_lists_exactly_the_minimum_partitions() {
    for h in small_universe().into_iter().chain(random_universe().into_iter().take(100)) {
        let e = enumerate_min_covers(&h, DEFAULT_ENUMERATION_LIMIT);
        let r = brute_rho(&h);
        let mut expected: Vec<Vec<VertexSet>> = hyperedge_partitions(&h)
            .into_iter()
            .filter(|p| p.len() == r)
            .map(|mut p| {
                p.sort();
                p
            })
            .collect();
        expected.sort();
        let mut got: Vec<Vec<VertexSet>> = e
            .covers
            .iter()
            .map(|c| {
                let mut p = c.parts().to_vec();
                p.sort();
                p
            })
            .collect();
        got.sort();
        assert_eq!(got, expected, "{h:?}");
        assert!(!e.truncated);

        let free = expected.iter().any(|p| p.iter().all(|b| b.len() >= 2));
        let found = has_singleton_free_min_cover(&h);
        assert_eq!(found.is_some(), free, "{h:?}");
        if let Some(c) = found {
            assert!(c.is_partition_of(&h) && c.len() == r && c.singleton_count() == 0);
        }
    }
}

#[test]
fn mu_matches_oracle_and_is_flag_invariant() {
    for h in small_universe().into_iter().chain(random_universe().into_iter().take(200)) {
        let (all, min) = brute_mu(&h);
        let (m_all, w_all) = mu(&h, false);
        let (m_min, w_min) = mu(&h, true);
        assert_eq!(m_all, all, "{h:?}");
        assert_eq!(m_min, min, "{h:?}");
        assert_eq!(m_all, m_min, "mu differs between all and minimum covers: {h:?}");
        assert!(w_all.is_partition_of(&h) && w_all.non_singleton_vertices() == m_all);
        assert!(w_min.is_partition_of(&h) && w_min.len() == rho(&h));
    }
}

#[test]
fn deletion_bounds_and_edgeless_characterisation() {
    for h in small_universe() {
        let r = rho(&h);
        for (v, rv) in rho_after_each_deletion(&h) {
            assert!(rv + 1 >= r && rv <= r);
            assert_eq!(rv, brute_rho(&h.delete_vertex(v).unwrap()));
        }
        assert!(r <= h.vertex_count());
        assert_eq!(r == h.vertex_count(), h.edge_graph().edge_count() == 0, "{h:?}");
    }
}

#[test]
fn closure_invariance_on_random_explicit_hypergraphs() {
    let mut rng = rng(77);
    for _ in 0..200 {
        let n = rng.gen_range(1..=7);
        let k = rng.gen_range(1..=6);
        let mut edges: Vec<VertexSet> = (0..k)
            .map(|_| VertexSet::from_bits(rng.gen::<u64>() & VertexSet::full(n).bits()))
            .filter(|e| !e.is_empty())
            .collect();
        let covered = edges.iter().fold(VertexSet::EMPTY, |a, e| a.union(*e));
        edges.extend(VertexSet::full(n).difference(covered).iter().map(VertexSet::singleton));
        let e = ExplicitHypergraph::new(n, edges).unwrap();
        let check = rho_closure_invariance_check(&e).unwrap();
        assert!(check.agrees(), "{e:?}: {check:?}");
    }
}

#[test]
fn named_fixtures() {
    // C5 stable sets: delete any vertex and rho drops to 2
    let c5 = HereditaryHypergraph::from_lists(5, &[&[0, 2], &[0, 3], &[1, 3], &[1, 4], &[2, 4]]).unwrap();
    for v in 0..5 {
        let d = c5.delete_vertex(v).unwrap();
        assert_eq!(brute_rho(&d), 2);
        assert_eq!(rho(&d), 2);
    }
    // prism triangles: rho = n / 3, dropping one triangle raises it
    let tri = HereditaryHypergraph::from_lists(6, &[&[0, 1, 2], &[3, 4, 5]]).unwrap();
    assert_eq!(rho(&tri), brute_rho(&tri));
    assert_eq!(rho(&tri), 2);
}
