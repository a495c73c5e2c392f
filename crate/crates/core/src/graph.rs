//! Simple graphs, digraphs and edge-weighted graphs on at most 64 vertices.
//!
//! Vertex labels are fixed: removing a vertex keeps the labels of the others,
//! so every structure carries its active vertex set next to the label bound.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result, VertexSet, MAX_VERTICES};

/// Read access shared by [`Graph`] and [`Digraph`]; undirected edges are arcs
/// in both directions.
pub trait Adjacency {
    /// Labels are drawn from `0..label_bound()`.
    fn label_bound(&self) -> usize;
    fn vertices(&self) -> VertexSet;
    fn has_arc(&self, u: usize, v: usize) -> bool;
    /// Out-neighbours of `v` among the active vertices.
    fn out_neighbors(&self, v: usize) -> VertexSet;

    fn vertex_count(&self) -> usize {
        self.vertices().len()
    }
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices(n))
    } else {
        Ok(())
    }
}

/// Undirected simple graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    vertices: VertexSet,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn label_bound(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Edgeless graph on `0..n`.
    pub fn new(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Graph { n, vertices: VertexSet::full(n), adj: vec![VertexSet::EMPTY; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`; rejects loops, repeated edges and inactive endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if !self.vertices.contains(x) {
                return Err(Error::BadIndex { index: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.adj[u].contains(v) {
            return Err(Error::ParallelEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.vertices.contains(v) && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        if v < self.n {
            self.adj[v].intersection(self.vertices)
        } else {
            VertexSet::EMPTY
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.iter().flat_map(move |u| self.neighbors(u).iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.iter().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// `G - v`, other labels unchanged.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertices.without(v))
    }

    /// `G[set]`, labels unchanged.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let vertices = self.vertices.intersection(set);
        let adj = self.adj.iter().map(|a| a.intersection(vertices)).collect();
        Graph { n: self.n, vertices, adj }
    }

    /// Complement on the active vertex set.
    pub fn complement(&self) -> Graph {
        let adj = (0..self.n)
            .map(|v| {
                if self.vertices.contains(v) {
                    self.vertices.difference(self.adj[v]).without(v)
                } else {
                    VertexSet::EMPTY
                }
            })
            .collect();
        Graph { n: self.n, vertices: self.vertices, adj }
    }

    /// Connected components, each listed once, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        components_by(self.vertices, |v| self.neighbors(v))
    }

    /// True for graphs with at most one vertex.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_stable(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.adj[v]))
    }
}

impl Adjacency for Graph {
    fn label_bound(&self) -> usize {
        self.n
    }

    fn vertices(&self) -> VertexSet {
        self.vertices
    }

    fn has_arc(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v)
    }

    fn out_neighbors(&self, v: usize) -> VertexSet {
        self.neighbors(v)
    }
}

/// Connected components of the graph on `vertices` with neighbourhood map
/// `nbrs`, ordered by smallest member.
pub(crate) fn components_by(vertices: VertexSet, nbrs: impl Fn(usize) -> VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut rest = vertices;
    while let Some(root) = rest.min() {
        let mut comp = VertexSet::singleton(root);
        let mut frontier = comp;
        while let Some(v) = frontier.min() {
            frontier.remove(v);
            let fresh = nbrs(v).intersection(vertices).difference(comp);
            comp = comp.union(fresh);
            frontier = frontier.union(fresh);
        }
        rest = rest.difference(comp);
        out.push(comp);
    }
    out
}

/// Directed graph without loops; both `(u, v)` and `(v, u)` may be present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    vertices: VertexSet,
    out: Vec<VertexSet>,
}

impl Digraph {
    pub fn label_bound(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn new(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Digraph { n, vertices: VertexSet::full(n), out: vec![VertexSet::EMPTY; n] })
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::new(n)?;
        for &(u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if !self.vertices.contains(x) {
                return Err(Error::BadIndex { index: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.out[u].contains(v) {
            return Err(Error::ParallelEdge(u, v));
        }
        self.out[u].insert(v);
        Ok(())
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.iter().flat_map(move |u| self.out_neighbors(u).iter().map(move |v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.arcs().count()
    }

    pub fn induced(&self, set: VertexSet) -> Digraph {
        let vertices = self.vertices.intersection(set);
        Digraph { n: self.n, vertices, out: self.out.iter().map(|a| a.intersection(vertices)).collect() }
    }

    /// Whether `D[set]` contains a directed cycle (a 2-cycle counts).
    ///
    /// Repeatedly strips vertices with no out-neighbour left in the set; a
    /// nonempty residue has a cycle.
    pub fn has_cycle_within(&self, set: VertexSet) -> bool {
        let mut rest = set.intersection(self.vertices);
        loop {
            let sinks: VertexSet = rest.iter().filter(|&v| self.out[v].is_disjoint(rest)).collect();
            if sinks.is_empty() {
                return !rest.is_empty();
            }
            rest = rest.difference(sinks);
        }
    }

    /// Simple graph on the same vertices with an edge for every 2-cycle.
    pub fn two_cycle_graph(&self) -> Graph {
        let adj = (0..self.n).map(|u| self.out[u].iter().filter(|&v| self.out[v].contains(u)).collect()).collect();
        Graph { n: self.n, vertices: self.vertices, adj }
    }
}

impl Adjacency for Digraph {
    fn label_bound(&self) -> usize {
        self.n
    }

    fn vertices(&self) -> VertexSet {
        self.vertices
    }

    fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.vertices.contains(v) && self.out[u].contains(v)
    }

    fn out_neighbors(&self, v: usize) -> VertexSet {
        if v < self.n {
            self.out[v].intersection(self.vertices)
        } else {
            VertexSet::EMPTY
        }
    }
}

/// Simple graph with a nonnegative weight `z(e)` on every edge.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedGraph {
    graph: Graph,
    // (u, v, z) with u < v, in insertion order
    weights: Vec<(usize, usize, f64)>,
}

impl WeightedGraph {
    pub fn new(n: usize) -> Result<Self> {
        Ok(WeightedGraph { graph: Graph::new(n)?, weights: Vec::new() })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        let mut g = WeightedGraph::new(n)?;
        for &(u, v, z) in edges {
            g.add_edge(u, v, z)?;
        }
        Ok(g)
    }

    /// Same edges as `g`, each with weight `z`.
    pub fn uniform(g: &Graph, z: f64) -> Result<Self> {
        let mut w = WeightedGraph::new(g.label_bound())?;
        for (u, v) in g.edges() {
            w.add_edge(u, v, z)?;
        }
        Ok(w)
    }

    pub fn add_edge(&mut self, u: usize, v: usize, z: f64) -> Result<()> {
        if !z.is_finite() || z < 0.0 {
            return Err(Error::NegativeWeight { u, v });
        }
        self.graph.add_edge(u, v)?;
        self.weights.push((u.min(v), u.max(v), z));
        Ok(())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weighted_edges(&self) -> &[(usize, usize, f64)] {
        &self.weights
    }

    pub fn total_weight(&self) -> f64 {
        self.weights.iter().map(|e| e.2).sum()
    }
}
