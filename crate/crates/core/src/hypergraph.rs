//! Hereditary hypergraphs stored by their generator antichain, plus explicit
//! (non-hereditary) hyperedge lists for duals and stable-set systems.

use alloc::vec::Vec;

use crate::families::IndependenceOracle;
use crate::graph::{components_by, Graph};
use crate::{Error, Result, VertexSet, MAX_VERTICES};

/// Hereditary hypergraph on a set of labelled vertices.
///
/// The hyperedges are all nonempty subsets of the generators. Generators form
/// an antichain, are nonempty, cover every vertex, and are kept sorted
/// lexicographically, so two equal hypergraphs compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HereditaryHypergraph {
    n: usize,
    vertices: VertexSet,
    generators: Vec<VertexSet>,
}

/// Inclusion-maximal nonempty members of `sets`, deduplicated and sorted
/// lexicographically.
pub fn maximal_sets(sets: &[VertexSet]) -> Vec<VertexSet> {
    let mut sorted: Vec<VertexSet> = sets.iter().copied().filter(|s| !s.is_empty()).collect();
    // larger sets first so a set is only compared against possible supersets
    sorted.sort_by(|a, b| b.len().cmp(&a.len()).then(a.bits().cmp(&b.bits())));
    sorted.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sorted.len());
    for s in sorted {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_by(|a, b| a.cmp_lex(*b));
    kept
}

impl HereditaryHypergraph {
    /// Hereditary closure of `hyperedges` on `0..n`.
    pub fn from_hyperedges(n: usize, hyperedges: &[VertexSet]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Self::on_vertices(n, VertexSet::full(n), hyperedges)
    }

    /// Hereditary closure of `hyperedges` on an arbitrary labelled vertex set.
    pub fn on_vertices(n: usize, vertices: VertexSet, hyperedges: &[VertexSet]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        if let Some(bad) = vertices.difference(VertexSet::full(n)).min() {
            return Err(Error::BadIndex { index: bad, n });
        }
        let mut covered = VertexSet::EMPTY;
        for e in hyperedges {
            if let Some(bad) = e.difference(vertices).min() {
                return Err(Error::BadIndex { index: bad, n });
            }
            covered = covered.union(*e);
        }
        if let Some(v) = vertices.difference(covered).min() {
            return Err(Error::UncoveredVertex(v));
        }
        Ok(HereditaryHypergraph { n, vertices, generators: maximal_sets(hyperedges) })
    }

    /// Convenience constructor from member lists.
    pub fn from_lists(n: usize, lists: &[&[usize]]) -> Result<Self> {
        let mut edges = Vec::with_capacity(lists.len());
        for l in lists {
            if let Some(&bad) = l.iter().find(|&&v| v >= n.min(MAX_VERTICES)) {
                return Err(Error::BadIndex { index: bad, n });
            }
            edges.push(l.iter().copied().collect());
        }
        Self::from_hyperedges(n, &edges)
    }

    /// Only singletons: every cover is the partition into points.
    pub fn singletons(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n.min(MAX_VERTICES)).map(VertexSet::singleton).collect();
        Self::from_hyperedges(n, &edges)
    }

    /// Upper bound on vertex labels.
    pub fn label_bound(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn generators(&self) -> &[VertexSet] {
        &self.generators
    }

    pub fn max_generator_size(&self) -> usize {
        self.generators.iter().map(|g| g.len()).max().unwrap_or(0)
    }

    pub fn is_hyperedge(&self, x: VertexSet) -> bool {
        !x.is_empty() && self.generators.iter().any(|g| x.is_subset(*g))
    }

    /// `H - v`; the remaining vertices keep their labels.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if !self.vertices.contains(v) {
            return Err(Error::BadIndex { index: v, n: self.n });
        }
        self.restrict(self.vertices.without(v))
    }

    /// Sub-hypergraph induced on `keep ∩ V`.
    pub fn restrict(&self, keep: VertexSet) -> Result<Self> {
        let vertices = self.vertices.intersection(keep);
        let gens: Vec<VertexSet> = self.generators.iter().map(|g| g.intersection(vertices)).collect();
        let covered = gens.iter().fold(VertexSet::EMPTY, |a, g| a.union(*g));
        if let Some(v) = vertices.difference(covered).min() {
            return Err(Error::UncoveredVertex(v));
        }
        Ok(HereditaryHypergraph { n: self.n, vertices, generators: maximal_sets(&gens) })
    }

    /// `H_2`: the graph of 2-element hyperedges.
    pub fn edge_graph(&self) -> Graph {
        let mut g = Graph::new(self.n).expect("n checked at construction").induced(self.vertices);
        for u in self.vertices.iter() {
            for v in self.neighbors(u).iter().filter(|&v| v > u) {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
        g
    }

    /// Neighbours of `v` in `H_2`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.generators.iter().filter(|g| g.contains(v)).fold(VertexSet::EMPTY, |a, g| a.union(*g)).without(v)
    }

    /// Components of `H_2`, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        components_by(self.vertices, |v| self.neighbors(v))
    }

    /// True when `H_2` is connected (or there is at most one vertex).
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The explicit dual: complements of the generators within `V`.
    pub fn dual(&self) -> ExplicitHypergraph {
        ExplicitHypergraph {
            n: self.n,
            vertices: self.vertices,
            edges: self.generators.iter().map(|g| self.vertices.difference(*g)).collect(),
        }
    }

    /// Every hyperedge of the closure, for small instances.
    pub fn closure_members(&self) -> Vec<VertexSet> {
        let mut all: Vec<VertexSet> =
            self.generators.iter().flat_map(|g| g.subsets().filter(|s| !s.is_empty())).collect();
        all.sort();
        all.dedup();
        all
    }
}

/// A hypergraph given by an explicit list of hyperedges, not closed under
/// subsets. Order and repetitions are preserved.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExplicitHypergraph {
    n: usize,
    vertices: VertexSet,
    edges: Vec<VertexSet>,
}

impl ExplicitHypergraph {
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let vertices = VertexSet::full(n);
        for e in &edges {
            if let Some(bad) = e.difference(vertices).min() {
                return Err(Error::BadIndex { index: bad, n });
            }
        }
        Ok(ExplicitHypergraph { n, vertices, edges })
    }

    pub fn label_bound(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// `{V \ e : e ∈ E}`, in the same order.
    pub fn dual(&self) -> ExplicitHypergraph {
        ExplicitHypergraph {
            n: self.n,
            vertices: self.vertices,
            edges: self.edges.iter().map(|e| self.vertices.difference(*e)).collect(),
        }
    }

    /// Whether `V` is the union of the hyperedges.
    pub fn is_cover(&self) -> bool {
        self.edges.iter().fold(VertexSet::EMPTY, |a, e| a.union(*e)) == self.vertices
    }

    /// Whether `t` meets every hyperedge.
    pub fn is_transversal(&self, t: VertexSet) -> bool {
        self.edges.iter().all(|e| !e.is_disjoint(t))
    }

    /// Whether `s` contains no hyperedge.
    pub fn is_stable(&self, s: VertexSet) -> bool {
        !self.edges.iter().any(|e| e.is_subset(s))
    }

    /// Oracle for the stable sets of this hypergraph.
    pub fn stable_sets(&self) -> StableSetsOf<'_> {
        StableSetsOf { hypergraph: self }
    }

    /// Hereditary closure of the listed hyperedges.
    pub fn hereditary_closure(&self) -> Result<HereditaryHypergraph> {
        HereditaryHypergraph::on_vertices(self.n, self.vertices, &self.edges)
    }
}

/// Stable sets of an explicit hypergraph: sets containing no hyperedge.
#[derive(Clone, Copy, Debug)]
pub struct StableSetsOf<'a> {
    hypergraph: &'a ExplicitHypergraph,
}

impl IndependenceOracle for StableSetsOf<'_> {
    fn vertices(&self) -> VertexSet {
        self.hypergraph.vertices
    }

    fn is_independent(&self, set: VertexSet) -> bool {
        self.hypergraph.is_stable(set)
    }
}
