//! Exact minimum covers of hereditary hypergraphs.
//!
//! Covers are represented as partitions of the vertex set into hyperedges:
//! any vertex lying in several parts of a cover can be dropped from all but
//! one of them without leaving the hypergraph.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::hypergraph::{maximal_sets, ExplicitHypergraph, HereditaryHypergraph};
use crate::{Error, Result, VertexSet};

/// Default cap on the number of covers listed by [`enumerate_min_covers`].
pub const DEFAULT_ENUMERATION_LIMIT: usize = 1_000_000;

/// A partition of the vertex set into hyperedges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Cover {
    parts: Vec<VertexSet>,
}

impl Cover {
    /// Parts are sorted by their smallest member.
    pub fn new(mut parts: Vec<VertexSet>) -> Self {
        parts.sort_by_key(|p| VertexSet::min(*p));
        Cover { parts }
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn singleton_count(&self) -> usize {
        self.parts.iter().filter(|p| p.len() == 1).count()
    }

    /// Number of vertices in parts with at least two members.
    pub fn non_singleton_vertices(&self) -> usize {
        self.parts.iter().filter(|p| p.len() >= 2).map(|p| p.len()).sum()
    }

    /// Every non-singleton part has exactly two members.
    pub fn only_edges_and_singletons(&self) -> bool {
        self.parts.iter().all(|p| p.len() <= 2)
    }

    /// Parts are nonempty hyperedges of `h`, pairwise disjoint, and their
    /// union is `V(h)`.
    pub fn is_partition_of(&self, h: &HereditaryHypergraph) -> bool {
        let mut seen = VertexSet::EMPTY;
        for p in &self.parts {
            if !h.is_hyperedge(*p) || !p.is_disjoint(seen) {
                return false;
            }
            seen = seen.union(*p);
        }
        seen == h.vertices()
    }
}

/// Summary numbers of one hypergraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverStats {
    pub rho: usize,
    pub mu: usize,
    pub has_singleton_free_min_cover: bool,
}

impl CoverStats {
    pub fn of(h: &HereditaryHypergraph) -> Self {
        CoverStats {
            rho: rho(h),
            mu: mu(h, false).0,
            has_singleton_free_min_cover: has_singleton_free_min_cover(h).is_some(),
        }
    }
}

struct Solver<'h> {
    h: &'h HereditaryHypergraph,
    // H_2 neighbourhoods, indexed by label
    nbrs: Vec<VertexSet>,
}

impl<'h> Solver<'h> {
    fn new(h: &'h HereditaryHypergraph) -> Self {
        let nbrs = (0..h.label_bound()).map(|v| h.neighbors(v)).collect();
        Solver { h, nbrs }
    }

    /// Inclusion-maximal sets `g ∩ uncovered` containing `v`, largest first,
    /// ties broken lexicographically.
    fn maximal_parts(&self, uncovered: VertexSet, v: usize) -> Vec<VertexSet> {
        let traces: Vec<VertexSet> =
            self.h.generators().iter().filter(|g| g.contains(v)).map(|g| g.intersection(uncovered)).collect();
        let mut parts = maximal_sets(&traces);
        parts.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp_lex(*b)));
        parts
    }

    /// Every hyperedge inside `uncovered` containing `v`, largest first, ties
    /// broken lexicographically.
    fn all_parts(&self, uncovered: VertexSet, v: usize) -> Vec<VertexSet> {
        let mut parts: Vec<VertexSet> = self
            .maximal_parts(uncovered, v)
            .into_iter()
            .flat_map(|m| m.without(v).subsets().map(move |s| s.with(v)))
            .collect();
        parts.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp_lex(*b)));
        parts.dedup();
        parts
    }

    /// Parts needed to cover `uncovered`, from below: vertices with no
    /// `H_2`-neighbour left need their own part, the rest are packed into
    /// parts of the largest available size.
    fn lower_bound(&self, uncovered: VertexSet) -> usize {
        if uncovered.is_empty() {
            return 0;
        }
        let isolated = uncovered.iter().filter(|&v| self.nbrs[v].is_disjoint(uncovered)).count();
        let rest = uncovered.len() - isolated;
        if rest == 0 {
            return isolated;
        }
        let largest = self.h.generators().iter().map(|g| g.intersection(uncovered).len()).max().unwrap_or(1).max(1);
        isolated + rest.div_ceil(largest)
    }

    fn branch_and_bound(&self, uncovered: VertexSet, current: &mut Vec<VertexSet>, best: &mut Option<Vec<VertexSet>>) {
        let Some(v) = uncovered.min() else {
            if best.as_ref().is_none_or(|b| current.len() < b.len()) {
                *best = Some(current.clone());
            }
            return;
        };
        let bound = best.as_ref().map_or(usize::MAX, |b| b.len());
        if current.len() + self.lower_bound(uncovered) >= bound {
            return;
        }
        for part in self.maximal_parts(uncovered, v) {
            current.push(part);
            self.branch_and_bound(uncovered.difference(part), current, best);
            current.pop();
        }
    }

    fn min_cover(&self) -> Cover {
        let mut best = None;
        self.branch_and_bound(self.h.vertices(), &mut Vec::new(), &mut best);
        Cover::new(best.unwrap_or_default())
    }

    /// Partitions of `uncovered` into exactly `remaining` parts, each drawn
    /// with at least `min_part` members; `visit` returns false to stop.
    fn partitions(
        &self,
        uncovered: VertexSet,
        remaining: usize,
        min_part: usize,
        current: &mut Vec<VertexSet>,
        visit: &mut dyn FnMut(&[VertexSet]) -> bool,
    ) -> bool {
        let Some(v) = uncovered.min() else {
            return remaining > 0 || visit(current);
        };
        if remaining == 0 || self.lower_bound(uncovered) > remaining {
            return true;
        }
        for part in self.all_parts(uncovered, v) {
            if part.len() < min_part {
                continue;
            }
            current.push(part);
            let go_on = self.partitions(uncovered.difference(part), remaining - 1, min_part, current, visit);
            current.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// A minimum cover of `h` as a partition into hyperedges; `ρ(h)` is its
/// length.
///
/// Branches on the lowest-labelled uncovered vertex over the maximal traces
/// `g ∩ uncovered` of generators containing it. A part of a minimum partition
/// can always be enlarged to such a trace at the expense of later parts, so
/// restricting to them loses nothing.
pub fn min_cover(h: &HereditaryHypergraph) -> Cover {
    Solver::new(h).min_cover()
}

/// `ρ(h)`; zero for the empty hypergraph.
pub fn rho(h: &HereditaryHypergraph) -> usize {
    min_cover(h).len()
}

/// `v ↦ ρ(h - v)` for every vertex.
///
/// # Panics
///
/// If some value leaves `[ρ(h) - 1, ρ(h)]`, which would mean a solver bug.
pub fn rho_after_each_deletion(h: &HereditaryHypergraph) -> BTreeMap<usize, usize> {
    let r = rho(h);
    h.vertices()
        .iter()
        .map(|v| {
            let rv = rho(&h.delete_vertex(v).expect("v is a vertex"));
            assert!(rv + 1 >= r && rv <= r, "rho(H - {v}) = {rv} outside [{}, {r}] for {h:?}", r.saturating_sub(1));
            (v, rv)
        })
        .collect()
}

/// Minimum covers listed by [`enumerate_min_covers`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverEnumeration {
    pub rho: usize,
    pub covers: Vec<Cover>,
    /// More minimum covers exist than were listed.
    pub truncated: bool,
}

/// All partitions of `V(h)` into `ρ(h)` hyperedges, at most `limit` of them,
/// in a fixed order.
pub fn enumerate_min_covers(h: &HereditaryHypergraph, limit: usize) -> CoverEnumeration {
    let solver = Solver::new(h);
    let r = solver.min_cover().len();
    let mut covers = Vec::new();
    let mut truncated = false;
    solver.partitions(h.vertices(), r, 1, &mut Vec::new(), &mut |parts| {
        if covers.len() == limit {
            truncated = true;
            return false;
        }
        covers.push(Cover::new(parts.to_vec()));
        true
    });
    CoverEnumeration { rho: r, covers, truncated }
}

/// A minimum cover with no singleton part, if one exists.
pub fn has_singleton_free_min_cover(h: &HereditaryHypergraph) -> Option<Cover> {
    let solver = Solver::new(h);
    let r = solver.min_cover().len();
    let mut found = None;
    solver.partitions(h.vertices(), r, 2, &mut Vec::new(), &mut |parts| {
        found = Some(Cover::new(parts.to_vec()));
        false
    });
    found
}

#[derive(Clone, Copy)]
struct MuEntry {
    parts: usize,
    mu: usize,
    first: VertexSet,
}

struct MuSearch<'s, 'h> {
    solver: &'s Solver<'h>,
    min_covers_only: bool,
    memo: BTreeMap<u64, MuEntry>,
}

impl MuSearch<'_, '_> {
    // Over all partitions: maximise μ. Over minimum ones: minimise the part
    // count first, then maximise μ; the lexicographic order is additive, so
    // optimal sub-partitions compose.
    fn better(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        if self.min_covers_only {
            a.0 < b.0 || (a.0 == b.0 && a.1 > b.1)
        } else {
            a.1 > b.1
        }
    }

    fn solve(&mut self, uncovered: VertexSet) -> MuEntry {
        let Some(v) = uncovered.min() else {
            return MuEntry { parts: 0, mu: 0, first: VertexSet::EMPTY };
        };
        if let Some(e) = self.memo.get(&uncovered.bits()) {
            return *e;
        }
        let mut best: Option<MuEntry> = None;
        for part in self.solver.all_parts(uncovered, v) {
            let rest = self.solve(uncovered.difference(part));
            let gain = if part.len() >= 2 { part.len() } else { 0 };
            let cand = MuEntry { parts: rest.parts + 1, mu: rest.mu + gain, first: part };
            if best.is_none_or(|b| self.better((cand.parts, cand.mu), (b.parts, b.mu))) {
                best = Some(cand);
            }
        }
        let best = best.expect("singleton {v} is always a part");
        self.memo.insert(uncovered.bits(), best);
        best
    }
}

/// `μ(h)`: the largest number of vertices covered by non-singleton parts,
/// over all partitions into hyperedges, or only over minimum ones when
/// `over_min_covers` is set. Returns the value and a witness partition.
///
/// Exact dynamic programming over uncovered sets; exponential, intended for
/// small instances.
pub fn mu(h: &HereditaryHypergraph, over_min_covers: bool) -> (usize, Cover) {
    let solver = Solver::new(h);
    let mut search = MuSearch { solver: &solver, min_covers_only: over_min_covers, memo: BTreeMap::new() };
    let top = search.solve(h.vertices());
    let mut parts = Vec::new();
    let mut rest = h.vertices();
    while !rest.is_empty() {
        let e = search.solve(rest);
        parts.push(e.first);
        rest = rest.difference(e.first);
    }
    (top.mu, Cover::new(parts))
}

/// Result of comparing `ρ` of an explicit hyperedge list with `ρ` of its
/// hereditary closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureCheck {
    pub rho_explicit: usize,
    pub rho_closure: usize,
}

impl ClosureCheck {
    pub fn agrees(&self) -> bool {
        self.rho_explicit == self.rho_closure
    }
}

/// Minimum number of members of `e` (used as they are, overlaps allowed)
/// whose union is `V`. Independent of the partition solver.
fn explicit_set_cover(e: &ExplicitHypergraph) -> usize {
    fn go(edges: &[VertexSet], uncovered: VertexSet, used: usize, best: &mut usize) {
        let Some(v) = uncovered.min() else {
            *best = (*best).min(used);
            return;
        };
        if used + 1 >= *best {
            return;
        }
        for &edge in edges.iter().filter(|e| e.contains(v)) {
            go(edges, uncovered.difference(edge), used + 1, best);
        }
    }
    let mut best = usize::MAX;
    go(e.edges(), e.vertices(), 0, &mut best);
    best
}

/// Cross-check: covers drawn from `e` itself and partitions of its hereditary
/// closure need the same number of parts. Fails with `UncoveredVertex` when
/// `e` does not cover `V`.
pub fn rho_closure_invariance_check(e: &ExplicitHypergraph) -> Result<ClosureCheck> {
    if let Some(v) = e.vertices().difference(e.edges().iter().fold(VertexSet::EMPTY, |a, x| a.union(*x))).min() {
        return Err(Error::UncoveredVertex(v));
    }
    let closure = e.hereditary_closure()?;
    Ok(ClosureCheck { rho_explicit: explicit_set_cover(e), rho_closure: rho(&closure) })
}
