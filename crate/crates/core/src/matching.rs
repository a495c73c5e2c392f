//! Maximum matching (Edmonds' blossom algorithm), factor-criticality, and a
//! direct check of Gallai's lemma on factor-critical graphs.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::VertexSet;

/// A set of pairwise disjoint edges, stored as `(u, v)` with `u < v` in
/// increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
    covered: VertexSet,
}

impl Matching {
    /// Builds a matching from edges; `None` if two edges share a vertex.
    pub fn from_edges(edges: impl IntoIterator<Item = (usize, usize)>) -> Option<Self> {
        let mut out = Vec::new();
        let mut covered = VertexSet::EMPTY;
        for (u, v) in edges {
            if u == v || covered.contains(u) || covered.contains(v) {
                return None;
            }
            covered.insert(u);
            covered.insert(v);
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        Some(Matching { edges: out, covered })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn covered(&self) -> VertexSet {
        self.covered
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Every edge belongs to `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.edges.iter().all(|&(u, v)| g.has_edge(u, v))
    }
}

const NONE: usize = usize::MAX;

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.label_bound();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free endpoint of an
    /// augmenting path if one exists.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.mate.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for to in self.g.neighbors(v).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

/// Maximum-cardinality matching of `g`.
///
/// Roots are tried in increasing label order and neighbours are scanned in
/// increasing order, so the result is a deterministic function of `g`.
pub fn max_matching(g: &Graph) -> Matching {
    let mut b = Blossom::new(g);
    for root in g.vertices().iter() {
        if b.mate[root] == NONE {
            if let Some(end) = b.find_path(root) {
                b.augment(end);
            }
        }
    }
    let edges = g.vertices().iter().filter(|&v| b.mate[v] != NONE && v < b.mate[v]).map(|v| (v, b.mate[v]));
    Matching::from_edges(edges).expect("mate array is symmetric")
}

/// For every vertex `v`, a matching of `G - v` covering `V \ {v}`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FactorCriticalCertificate {
    pub near_perfect: BTreeMap<usize, Matching>,
}

impl FactorCriticalCertificate {
    /// Re-validates every stored matching against `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        let vs = g.vertices();
        self.near_perfect.keys().copied().collect::<VertexSet>() == vs
            && self.near_perfect.iter().all(|(&v, m)| m.covered() == vs.without(v) && m.is_valid_in(g))
    }
}

/// `Some(certificate)` iff `g` is factor-critical: connected, and `G - v` has
/// a perfect matching for every vertex `v`. The one-vertex graph qualifies;
/// the empty graph does not.
pub fn is_factor_critical(g: &Graph) -> Option<FactorCriticalCertificate> {
    let n = g.vertex_count();
    if n == 0 || n.is_multiple_of(2) || !g.is_connected() {
        return None;
    }
    let mut near_perfect = BTreeMap::new();
    for v in g.vertices().iter() {
        let m = max_matching(&g.remove_vertex(v));
        if 2 * m.size() != n - 1 {
            return None;
        }
        near_perfect.insert(v, m);
    }
    Some(FactorCriticalCertificate { near_perfect })
}

/// Why Gallai's lemma does not apply to a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LemmaHypothesisFailure {
    Empty,
    NotConnected {
        components: Vec<VertexSet>,
    },
    /// `ν(G - vertex) < ν(G)`.
    DeletionLowersNu {
        vertex: usize,
        nu_after: usize,
    },
}

/// Outcome of checking the lemma "connected and `ν(G - v) = ν(G)` for all `v`
/// implies `ν(G) = (n - 1) / 2`" on one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LemmaReport {
    /// Hypotheses hold and so does the conclusion; `witnesses` holds a maximum
    /// matching of `G - v` for every `v`, each of size `ν`.
    Holds {
        nu: usize,
        witnesses: FactorCriticalCertificate,
    },
    /// Hypotheses hold but the conclusion fails. Never expected.
    Violated {
        nu: usize,
        n: usize,
    },
    NotApplicable {
        nu: usize,
        failure: LemmaHypothesisFailure,
    },
}

pub fn verify_gallai_lemma(g: &Graph) -> LemmaReport {
    let nu = max_matching(g).size();
    let n = g.vertex_count();
    if n == 0 {
        return LemmaReport::NotApplicable { nu, failure: LemmaHypothesisFailure::Empty };
    }
    let components = g.components();
    if components.len() > 1 {
        return LemmaReport::NotApplicable { nu, failure: LemmaHypothesisFailure::NotConnected { components } };
    }
    let mut near_perfect = BTreeMap::new();
    for v in g.vertices().iter() {
        let m = max_matching(&g.remove_vertex(v));
        if m.size() != nu {
            return LemmaReport::NotApplicable {
                nu,
                failure: LemmaHypothesisFailure::DeletionLowersNu { vertex: v, nu_after: m.size() },
            };
        }
        near_perfect.insert(v, m);
    }
    if 2 * nu + 1 == n {
        LemmaReport::Holds { nu, witnesses: FactorCriticalCertificate { near_perfect } }
    } else {
        LemmaReport::Violated { nu, n }
    }
}
