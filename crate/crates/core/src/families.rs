//! Hereditary families built from graphs, digraphs and weighted graphs.
//!
//! Each family is an [`IndependenceOracle`]: a predicate on vertex sets that
//! is closed under taking subsets. [`maximal_generators`] turns an oracle into
//! the generator antichain consumed by the cover solver.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Adjacency, Digraph, Graph, WeightedGraph};
use crate::hypergraph::HereditaryHypergraph;
use crate::{Error, Result, VertexSet};

/// Monotone decreasing predicate on subsets of a vertex set.
///
/// Implementations must accept every singleton and be closed under subsets:
/// `is_independent(x)` and `y ⊆ x` imply `is_independent(y)`.
pub trait IndependenceOracle {
    fn vertices(&self) -> VertexSet;
    fn is_independent(&self, set: VertexSet) -> bool;
}

impl<O: IndependenceOracle + ?Sized> IndependenceOracle for &O {
    fn vertices(&self) -> VertexSet {
        (**self).vertices()
    }

    fn is_independent(&self, set: VertexSet) -> bool {
        (**self).is_independent(set)
    }
}

/// Oracle from a closure.
#[derive(Clone, Debug)]
pub struct FnOracle<F> {
    vertices: VertexSet,
    predicate: F,
}

impl<F: Fn(VertexSet) -> bool> FnOracle<F> {
    pub fn new(vertices: VertexSet, predicate: F) -> Self {
        FnOracle { vertices, predicate }
    }
}

impl<F: Fn(VertexSet) -> bool> IndependenceOracle for FnOracle<F> {
    fn vertices(&self) -> VertexSet {
        self.vertices
    }

    fn is_independent(&self, set: VertexSet) -> bool {
        (self.predicate)(set)
    }
}

/// Stable sets of a graph; `ρ` of this family is the chromatic number.
#[derive(Clone, Debug)]
pub struct StableSets {
    graph: Graph,
}

pub fn stable_set_family(g: &Graph) -> StableSets {
    StableSets { graph: g.clone() }
}

impl IndependenceOracle for StableSets {
    fn vertices(&self) -> VertexSet {
        self.graph.vertices()
    }

    fn is_independent(&self, set: VertexSet) -> bool {
        set.is_subset(self.graph.vertices()) && self.graph.is_stable(set)
    }
}

/// Cliques of a graph; `ρ` is the clique cover number.
#[derive(Clone, Debug)]
pub struct Cliques {
    graph: Graph,
}

pub fn clique_family(g: &Graph) -> Cliques {
    Cliques { graph: g.clone() }
}

impl IndependenceOracle for Cliques {
    fn vertices(&self) -> VertexSet {
        self.graph.vertices()
    }

    fn is_independent(&self, set: VertexSet) -> bool {
        set.is_subset(self.graph.vertices()) && self.graph.is_clique(set)
    }
}

/// Members of `base` with at most `k` vertices.
#[derive(Clone, Debug)]
pub struct Bounded<O> {
    base: O,
    k: usize,
}

pub fn bounded_class_family<O: IndependenceOracle>(base: O, k: usize) -> Result<Bounded<O>> {
    if k < 2 {
        return Err(Error::BadK(k));
    }
    Ok(Bounded { base, k })
}

impl<O: IndependenceOracle> IndependenceOracle for Bounded<O> {
    fn vertices(&self) -> VertexSet {
        self.base.vertices()
    }

    fn is_independent(&self, set: VertexSet) -> bool {
        set.len() <= self.k && self.base.is_independent(set)
    }
}

/// Vertex sets inducing an acyclic subdigraph; `ρ` is the dichromatic number.
#[derive(Clone, Debug)]
pub struct AcyclicSets {
    digraph: Digraph,
}

pub fn acyclic_family(d: &Digraph) -> AcyclicSets {
    AcyclicSets { digraph: d.clone() }
}

impl IndependenceOracle for AcyclicSets {
    fn vertices(&self) -> VertexSet {
        self.digraph.vertices()
    }

    fn is_independent(&self, set: VertexSet) -> bool {
        set.is_subset(self.digraph.vertices()) && !self.digraph.has_cycle_within(set)
    }
}

/// Combines the weights of the edges induced by a vertex set. Must be
/// monotone: adding weights never decreases the value.
pub trait EdgeAggregate {
    fn aggregate(&self, weights: &mut dyn Iterator<Item = f64>) -> f64;
}

/// Plain sum of the induced edge weights.
#[derive(Clone, Copy, Debug, Default)]
pub struct WeightedSum;

impl EdgeAggregate for WeightedSum {
    fn aggregate(&self, weights: &mut dyn Iterator<Item = f64>) -> f64 {
        weights.sum()
    }
}

/// Vertex sets whose induced edges aggregate to at most `lambda`.
#[derive(Clone, Debug)]
pub struct Threshold<A> {
    graph: WeightedGraph,
    lambda: f64,
    aggregate: A,
}

pub fn threshold_family(g: &WeightedGraph, lambda: f64) -> Result<Threshold<WeightedSum>> {
    threshold_family_with(g, lambda, WeightedSum)
}

pub fn threshold_family_with<A: EdgeAggregate>(g: &WeightedGraph, lambda: f64, aggregate: A) -> Result<Threshold<A>> {
    if let Some(&(u, v, _)) = g.weighted_edges().iter().find(|e| e.2.is_nan() || e.2 < 0.0) {
        return Err(Error::NegativeWeight { u, v });
    }
    let t = Threshold { graph: g.clone(), lambda, aggregate };
    // singletons induce no edges
    let empty = t.aggregate.aggregate(&mut core::iter::empty());
    if lambda.is_nan() || empty.is_nan() || empty > lambda {
        return Err(Error::LambdaTooSmall);
    }
    Ok(t)
}

impl<A: EdgeAggregate> IndependenceOracle for Threshold<A> {
    fn vertices(&self) -> VertexSet {
        self.graph.graph().vertices()
    }

    fn is_independent(&self, set: VertexSet) -> bool {
        if !set.is_subset(self.vertices()) {
            return false;
        }
        let mut induced =
            self.graph.weighted_edges().iter().filter(|&&(u, v, _)| set.contains(u) && set.contains(v)).map(|e| e.2);
        self.aggregate.aggregate(&mut induced) <= self.lambda
    }
}

/// Largest supported forbidden pattern.
pub const MAX_PATTERN_VERTICES: usize = 5;

/// Vertex sets `U` such that `G[U]` has no induced copy of any pattern.
#[derive(Clone, Debug)]
pub struct ForbiddenInduced<G> {
    host: G,
    patterns: Vec<G>,
}

/// Works for graphs and digraphs alike; host and patterns must be the same
/// kind.
pub fn forbidden_subgraph_family<G: Adjacency + Clone>(host: &G, forbidden: &[G]) -> Result<ForbiddenInduced<G>> {
    for p in forbidden {
        let k = p.vertex_count();
        if k <= 1 {
            return Err(Error::SingletonExcluded);
        }
        if k > MAX_PATTERN_VERTICES {
            return Err(Error::PatternTooLarge(k));
        }
    }
    Ok(ForbiddenInduced { host: host.clone(), patterns: forbidden.to_vec() })
}

/// Whether `host[set]` contains an induced copy of `pattern`: brute force
/// over injections of the pattern's vertices into `set`.
pub fn contains_induced<G: Adjacency>(host: &G, set: VertexSet, pattern: &G) -> bool {
    fn extend<G: Adjacency>(host: &G, pattern: &G, pv: &[usize], image: &mut Vec<usize>, free: VertexSet) -> bool {
        let i = image.len();
        if i == pv.len() {
            return true;
        }
        for h in free.iter() {
            let fits = (0..i).all(|j| {
                pattern.has_arc(pv[i], pv[j]) == host.has_arc(h, image[j])
                    && pattern.has_arc(pv[j], pv[i]) == host.has_arc(image[j], h)
            });
            if fits {
                image.push(h);
                if extend(host, pattern, pv, image, free.without(h)) {
                    return true;
                }
                image.pop();
            }
        }
        false
    }
    let pv: Vec<usize> = pattern.vertices().iter().collect();
    if pv.len() > set.len() {
        return false;
    }
    extend(host, pattern, &pv, &mut Vec::with_capacity(pv.len()), set.intersection(host.vertices()))
}

impl<G: Adjacency> IndependenceOracle for ForbiddenInduced<G> {
    fn vertices(&self) -> VertexSet {
        self.host.vertices()
    }

    fn is_independent(&self, set: VertexSet) -> bool {
        set.is_subset(self.host.vertices()) && !self.patterns.iter().any(|p| contains_induced(&self.host, set, p))
    }
}

/// Default cap on the number of maximal sets [`maximal_generators`] emits.
pub const DEFAULT_GENERATOR_BUDGET: usize = 1_000_000;

const MONOTONICITY_SAMPLES: usize = 1000;
const MONOTONICITY_SEED: u64 = 0x5e_ed0f_3a1e;

/// Random spot-check of monotonicity: half the samples draw `x` uniformly,
/// half draw it as a subset of a known independent set; `y` is a random
/// subset of `x`.
fn spot_check_monotone<O: IndependenceOracle>(oracle: &O, known: &[VertexSet]) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(MONOTONICITY_SEED);
    let vs = oracle.vertices();
    for i in 0..MONOTONICITY_SAMPLES {
        let pool = if i % 2 == 1 && !known.is_empty() { known[rng.gen_range(0..known.len())] } else { vs };
        let x = VertexSet::from_bits(rng.gen::<u64>() & pool.bits());
        let y = VertexSet::from_bits(rng.gen::<u64>() & x.bits());
        if oracle.is_independent(x) && !oracle.is_independent(y) {
            return Err(Error::MonotonicityViolation { larger: x, smaller: y });
        }
    }
    Ok(())
}

struct MaximalSearch<'o, O> {
    oracle: &'o O,
    order: Vec<usize>,
    budget: usize,
    out: Vec<VertexSet>,
}

impl<O: IndependenceOracle> MaximalSearch<'_, O> {
    /// Decides `order[i..]` given the chosen set `chosen` and the vertices
    /// `skipped` that were addable but left out; each of those must end up
    /// blocked by a later addition.
    fn expand(&mut self, i: usize, chosen: VertexSet, skipped: VertexSet) -> Result<()> {
        let Some(&v) = self.order.get(i) else {
            if skipped.iter().all(|x| !self.oracle.is_independent(chosen.with(x))) {
                if self.out.len() == self.budget {
                    return Err(Error::GeneratorBudgetExceeded(self.budget));
                }
                self.out.push(chosen);
            }
            return Ok(());
        };
        if !self.oracle.is_independent(chosen.with(v)) {
            return self.expand(i + 1, chosen, skipped);
        }
        self.expand(i + 1, chosen.with(v), skipped)?;
        // Leaving v out only pays off if the remaining addable vertices can
        // block it; every later addition lies in `reachable`.
        let reachable: VertexSet =
            self.order[i + 1..].iter().copied().filter(|&r| self.oracle.is_independent(chosen.with(r))).collect();
        if self.oracle.is_independent(chosen.union(reachable).with(v)) {
            return Ok(());
        }
        self.expand(i + 1, chosen, skipped.with(v))
    }
}

/// Generator antichain of the family accepted by `oracle`, with the default
/// budget.
pub fn maximal_generators<O: IndependenceOracle>(oracle: &O) -> Result<HereditaryHypergraph> {
    maximal_generators_with_budget(oracle, DEFAULT_GENERATOR_BUDGET)
}

/// All inclusion-maximal independent sets, each found once by an ordered
/// include/exclude expansion over the vertices.
///
/// Fails with `UncoveredVertex` if a singleton is rejected, with
/// `MonotonicityViolation` if the spot-check catches a non-hereditary
/// predicate, and with `GeneratorBudgetExceeded` past `budget` sets.
pub fn maximal_generators_with_budget<O: IndependenceOracle>(
    oracle: &O,
    budget: usize,
) -> Result<HereditaryHypergraph> {
    let vs = oracle.vertices();
    if let Some(v) = vs.iter().find(|&v| !oracle.is_independent(VertexSet::singleton(v))) {
        return Err(Error::UncoveredVertex(v));
    }
    spot_check_monotone(oracle, &[])?;
    let mut search = MaximalSearch { oracle, order: vs.iter().collect(), budget, out: Vec::new() };
    search.expand(0, VertexSet::EMPTY, VertexSet::EMPTY)?;
    spot_check_monotone(oracle, &search.out)?;
    let n = vs.max().map_or(0, |m| m + 1);
    HereditaryHypergraph::on_vertices(n, vs, &search.out)
}
