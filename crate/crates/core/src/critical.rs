//! Criticality, critical cores, and constructive checks of the bound
//! `ρ ≤ (n + 1) / 2` for connected critical hereditary hypergraphs together
//! with its two corollaries.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cover::{has_singleton_free_min_cover, rho, rho_after_each_deletion, Cover};
use crate::hypergraph::HereditaryHypergraph;
use crate::matching::{is_factor_critical, FactorCriticalCertificate};
use crate::{Error, Result, VertexSet};

/// Per-vertex outcome of deleting each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalityReport {
    pub rho: usize,
    pub rho_after_deletion: BTreeMap<usize, usize>,
    /// Vertices with `ρ(H - v) = ρ(H)`.
    pub failing_vertices: Vec<usize>,
}

impl CriticalityReport {
    pub fn is_critical(&self) -> bool {
        self.failing_vertices.is_empty()
    }
}

/// `H` is critical when every single-vertex deletion lowers `ρ` by one.
pub fn is_critical(h: &HereditaryHypergraph) -> CriticalityReport {
    let r = rho(h);
    let rho_after_deletion = rho_after_each_deletion(h);
    let failing_vertices = rho_after_deletion.iter().filter(|&(_, &rv)| rv == r).map(|(&v, _)| v).collect();
    CriticalityReport { rho: r, rho_after_deletion, failing_vertices }
}

/// Outcome of [`critical_core`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalCore {
    pub core: HereditaryHypergraph,
    /// Deleted vertices, in deletion order.
    pub deleted: Vec<usize>,
}

/// Deletes, one at a time, the smallest vertex whose removal keeps `ρ`, until
/// none is left. The result is critical with the same `ρ`.
pub fn critical_core(h: &HereditaryHypergraph) -> CriticalCore {
    let target = rho(h);
    let mut core = h.clone();
    let mut deleted = Vec::new();
    'outer: loop {
        for v in core.vertices().iter() {
            let smaller = core.delete_vertex(v).expect("v is a vertex");
            if rho(&smaller) == target {
                core = smaller;
                deleted.push(v);
                continue 'outer;
            }
        }
        return CriticalCore { core, deleted };
    }
}

/// Why the bound does not apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotApplicable {
    Empty,
    NotConnected { components: Vec<VertexSet> },
    NotCritical { failing_vertices: Vec<usize> },
}

impl fmt::Display for NotApplicable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotApplicable::Empty => f.write_str("empty hypergraph"),
            NotApplicable::NotConnected { .. } => f.write_str("not connected"),
            NotApplicable::NotCritical { .. } => f.write_str("not critical"),
        }
    }
}

/// Which side of the dichotomy a connected critical instance falls on, with
/// witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheoremClassification {
    NotApplicable(NotApplicable),
    /// `ρ < (n + 1) / 2`, witnessed by a minimum cover without singletons.
    Strict {
        rho: usize,
        cover: Cover,
    },
    /// `ρ = (n + 1) / 2`: `H_2` is factor-critical and, for every vertex `v`,
    /// `{v}` plus a perfect matching of `H_2 - v` is a minimum cover.
    Equality {
        rho: usize,
        certificate: FactorCriticalCertificate,
        structured_covers: BTreeMap<usize, Cover>,
    },
}

impl TheoremClassification {
    pub fn name(&self) -> &'static str {
        match self {
            TheoremClassification::NotApplicable(_) => "not-applicable",
            TheoremClassification::Strict { .. } => "strict",
            TheoremClassification::Equality { .. } => "equality",
        }
    }
}

/// A connected critical instance that breaks the expected dichotomy. Carries
/// the instance so it can be replayed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremViolation {
    pub instance: HereditaryHypergraph,
    pub stage: &'static str,
    pub expected: String,
    pub got: String,
}

impl fmt::Display for TheoremViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: expected {}, got {} (generators {:?})",
            self.stage,
            self.expected,
            self.got,
            self.instance.generators()
        )
    }
}

impl core::error::Error for TheoremViolation {}

fn violation(h: &HereditaryHypergraph, stage: &'static str, expected: String, got: String) -> TheoremViolation {
    TheoremViolation { instance: h.clone(), stage, expected, got }
}

/// Classifies `h` against the bound `ρ ≤ (n + 1) / 2`.
///
/// Disconnected or non-critical inputs are `NotApplicable`. Otherwise every
/// claim is checked from scratch and witnessed: the singleton-free minimum
/// cover in the strict case, the factor-critical certificate of `H_2` and one
/// validated structured cover per vertex in the equality case. Anything that
/// does not fit is returned as a [`TheoremViolation`].
pub fn classify_critical(h: &HereditaryHypergraph) -> core::result::Result<TheoremClassification, TheoremViolation> {
    let n = h.vertex_count();
    if n == 0 {
        return Ok(TheoremClassification::NotApplicable(NotApplicable::Empty));
    }
    let components = h.components();
    if components.len() > 1 {
        return Ok(TheoremClassification::NotApplicable(NotApplicable::NotConnected { components }));
    }
    let report = is_critical(h);
    if !report.is_critical() {
        return Ok(TheoremClassification::NotApplicable(NotApplicable::NotCritical {
            failing_vertices: report.failing_vertices,
        }));
    }
    let r = report.rho;
    if 2 * r > n + 1 {
        return Err(violation(h, "bound", alloc::format!("rho <= {}/2", n + 1), alloc::format!("rho = {r}")));
    }
    if let Some(cover) = has_singleton_free_min_cover(h) {
        if cover.len() != r || cover.singleton_count() != 0 || !cover.is_partition_of(h) {
            return Err(violation(
                h,
                "strict-witness",
                "valid singleton-free minimum cover".into(),
                alloc::format!("{cover:?}"),
            ));
        }
        return Ok(TheoremClassification::Strict { rho: r, cover });
    }
    if 2 * r != n + 1 {
        return Err(violation(
            h,
            "dichotomy",
            "a singleton-free minimum cover when rho < (n+1)/2".into(),
            alloc::format!("rho = {r}, n = {n}, every minimum cover has a singleton"),
        ));
    }
    let h2 = h.edge_graph();
    let Some(certificate) = is_factor_critical(&h2) else {
        return Err(violation(h, "factor-critical", "H_2 factor-critical".into(), "H_2 not factor-critical".into()));
    };
    let mut structured_covers = BTreeMap::new();
    for (&v, m) in &certificate.near_perfect {
        let cover = cover_from_matching(v, m.edges());
        if cover.len() != r || !cover.is_partition_of(h) {
            return Err(violation(
                h,
                "structured-cover",
                alloc::format!("minimum cover of size {r} with singleton {{{v}}}"),
                alloc::format!("{cover:?}"),
            ));
        }
        structured_covers.insert(v, cover);
    }
    Ok(TheoremClassification::Equality { rho: r, certificate, structured_covers })
}

fn cover_from_matching(v: usize, edges: &[(usize, usize)]) -> Cover {
    let mut parts: Vec<VertexSet> = edges.iter().map(|&(a, b)| VertexSet::from([a, b])).collect();
    parts.push(VertexSet::singleton(v));
    Cover::new(parts)
}

/// The minimum cover `{v}` plus a perfect matching of `H_2 - v`; only exists
/// in the equality case.
pub fn structured_cover(h: &HereditaryHypergraph, v: usize) -> Result<Cover> {
    if !h.vertices().contains(v) {
        return Err(Error::BadIndex { index: v, n: h.label_bound() });
    }
    match classify_critical(h) {
        Ok(TheoremClassification::Equality { mut structured_covers, .. }) => {
            Ok(structured_covers.remove(&v).expect("one cover per vertex"))
        }
        _ => Err(Error::NotEqualityCase),
    }
}

/// Check of "`n ≤ 2(ρ - 1)` implies not critical or not connected".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallaiCorollaryReport {
    pub n: usize,
    pub rho: usize,
    pub condition_met: bool,
    /// Set when the condition holds and `H` is not critical.
    pub not_critical: Option<Vec<usize>>,
    /// Set when the condition holds and `H` is disconnected.
    pub not_connected: Option<Vec<VertexSet>>,
}

impl GallaiCorollaryReport {
    /// Vacuously true when the condition fails.
    pub fn holds(&self) -> bool {
        !self.condition_met || self.not_critical.is_some() || self.not_connected.is_some()
    }
}

fn size_condition(n: usize, r: usize) -> bool {
    r >= 1 && n <= 2 * (r - 1)
}

pub fn check_corollary_gallai(h: &HereditaryHypergraph) -> GallaiCorollaryReport {
    let n = h.vertex_count();
    let r = rho(h);
    let mut report = GallaiCorollaryReport {
        n,
        rho: r,
        condition_met: size_condition(n, r),
        not_critical: None,
        not_connected: None,
    };
    if report.condition_met {
        let crit = is_critical(h);
        if !crit.is_critical() {
            report.not_critical = Some(crit.failing_vertices);
        }
        let comps = h.components();
        if comps.len() > 1 {
            report.not_connected = Some(comps);
        }
    }
    report
}

/// Witnesses for "some vertex lowers `ρ` by one, or `V` splits into two sides
/// with no edge of `H_2` across". Both are reported when both exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcreteWitness {
    /// Smallest `v` with `ρ(H - v) = ρ(H) - 1`.
    pub critical_vertex: Option<usize>,
    /// First component of `H_2` against the rest.
    pub bipartition: Option<(VertexSet, VertexSet)>,
}

/// Requires `n ≤ 2(ρ - 1)`; otherwise `ConditionNotMet`. A result with
/// neither witness would contradict the corollary and comes back as
/// `Ok` with both fields empty, for the caller to report.
pub fn check_corollary_concrete(h: &HereditaryHypergraph) -> Result<ConcreteWitness> {
    let n = h.vertex_count();
    let r = rho(h);
    if !size_condition(n, r) {
        return Err(Error::ConditionNotMet { n, rho: r });
    }
    let critical_vertex = rho_after_each_deletion(h).into_iter().find(|&(_, rv)| rv + 1 == r).map(|(v, _)| v);
    let comps = h.components();
    let bipartition = (comps.len() > 1).then(|| (comps[0], h.vertices().difference(comps[0])));
    Ok(ConcreteWitness { critical_vertex, bipartition })
}

impl ConcreteWitness {
    pub fn holds(&self) -> bool {
        self.critical_vertex.is_some() || self.bipartition.is_some()
    }
}
