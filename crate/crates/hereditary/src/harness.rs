//! Batch verification of the cover bound and its corollaries over generated
//! universes of hereditary hypergraphs.

use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use hereditary_core::universe::{GeneratorConfig, Mode};
use hereditary_core::{
    check_corollary_concrete, check_corollary_gallai, classify_critical, is_critical, is_factor_critical, min_cover,
    mu, HereditaryHypergraph, TheoremClassification,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::io::HypergraphFile;

/// Environment variable overriding the number of worker threads.
pub const WORKERS_ENV: &str = "HEREDITARY_WORKERS";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Also compare μ over all partitions with μ over minimum ones.
    pub check_mu: bool,
    /// Worker threads; `None` reads [`WORKERS_ENV`], then uses all cores.
    pub workers: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigSummary {
    pub n: usize,
    pub mode: &'static str,
    pub seed: Option<u64>,
    pub sample_count: Option<usize>,
    pub max_generator_count: Option<usize>,
    pub check_mu: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub instances_checked: usize,
    pub connected: usize,
    pub critical: usize,
    pub connected_critical_found: usize,
    pub strict_count: usize,
    pub equality_count: usize,
    pub corollary_condition_met: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub instance: HypergraphFile,
    pub stage: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub config: ConfigSummary,
    pub counts: Counts,
    pub violations: Vec<Violation>,
    pub runtime_seconds: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// The report as JSON; with `timing` off, `runtime_seconds` is written as
    /// 0 so equal configurations give byte-identical output.
    pub fn to_json(&self, timing: bool) -> String {
        let mut r = self.clone();
        if !timing {
            r.runtime_seconds = 0.0;
        }
        serde_json::to_string_pretty(&r).expect("plain data serializes")
    }
}

#[derive(Default)]
struct Outcome {
    counts: Counts,
    violations: Vec<Violation>,
}

impl Outcome {
    fn flag(&mut self, h: &HereditaryHypergraph, stage: &str, expected: impl Into<String>, got: impl Into<String>) {
        self.violations.push(Violation {
            instance: HypergraphFile::from_hypergraph(h),
            stage: stage.into(),
            expected: expected.into(),
            got: got.into(),
        });
    }
}

/// All checks on one instance.
fn check_instance(h: &HereditaryHypergraph, check_mu: bool) -> Outcome {
    let mut out = Outcome::default();
    out.counts.instances_checked = 1;
    let n = h.vertex_count();

    let witness = min_cover(h);
    if !witness.is_partition_of(h) {
        out.flag(h, "min-cover", "a partition into hyperedges", format!("{witness:?}"));
    }
    let rho = witness.len();
    let connected = h.is_connected();
    let critical = is_critical(h);
    out.counts.connected = connected as usize;
    out.counts.critical = critical.is_critical() as usize;

    if connected && critical.is_critical() {
        out.counts.connected_critical_found = 1;
        match classify_critical(h) {
            Ok(TheoremClassification::Strict { .. }) => out.counts.strict_count = 1,
            Ok(TheoremClassification::Equality { certificate, .. }) => {
                out.counts.equality_count = 1;
                if !certificate.validate(&h.edge_graph()) || is_factor_critical(&h.edge_graph()).is_none() {
                    out.flag(h, "certificate", "valid factor-critical certificate of H_2", "invalid certificate");
                }
            }
            Ok(TheoremClassification::NotApplicable(r)) => {
                out.flag(h, "classify", "strict or equality", format!("not applicable: {r}"));
            }
            Err(v) => out.flag(h, v.stage, v.expected, v.got),
        }
    }

    if rho >= 1 && n <= 2 * (rho - 1) {
        out.counts.corollary_condition_met = 1;
        let rep = check_corollary_gallai(h);
        if !rep.holds() {
            out.flag(h, "corollary-gallai", "not critical or not connected", "critical and connected");
        }
        match check_corollary_concrete(h) {
            Ok(w) if w.holds() => {}
            Ok(_) => out.flag(h, "corollary-concrete", "critical vertex or bipartition", "neither"),
            Err(e) => out.flag(h, "corollary-concrete", "condition met", e.to_string()),
        }
    }

    if check_mu {
        let (all, _) = mu(h, false);
        let (min, _) = mu(h, true);
        if all != min {
            out.flag(h, "mu-invariance", format!("mu over minimum covers = {all}"), format!("{min}"));
        }
    }
    out
}

fn check_guarded(h: &HereditaryHypergraph, check_mu: bool) -> Outcome {
    match panic::catch_unwind(AssertUnwindSafe(|| check_instance(h, check_mu))) {
        Ok(o) => o,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            let mut o = Outcome::default();
            o.counts.instances_checked = 1;
            o.flag(h, "panic", "no panic", msg);
            o
        }
    }
}

fn worker_count(opts: &VerifyOptions) -> usize {
    opts.workers
        .or_else(|| std::env::var(WORKERS_ENV).ok().and_then(|s| s.parse().ok()))
        .filter(|&w| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
}

/// Generates the universe described by `cfg` and checks every instance:
/// minimum-cover validity, the bound and dichotomy for connected critical
/// instances, both corollaries whenever `n ≤ 2(ρ - 1)`, and optionally μ.
/// Violations are collected in instance order.
pub fn verify_universe(
    cfg: &GeneratorConfig,
    opts: VerifyOptions,
) -> Result<VerificationReport, hereditary_core::Error> {
    let start = Instant::now();
    let instances = cfg.instances()?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(worker_count(&opts)).build().expect("thread pool");
    let outcomes: Vec<Outcome> =
        pool.install(|| instances.par_iter().map(|h| check_guarded(h, opts.check_mu)).collect());

    let mut counts = Counts::default();
    let mut violations = Vec::new();
    for o in outcomes {
        counts.instances_checked += o.counts.instances_checked;
        counts.connected += o.counts.connected;
        counts.critical += o.counts.critical;
        counts.connected_critical_found += o.counts.connected_critical_found;
        counts.strict_count += o.counts.strict_count;
        counts.equality_count += o.counts.equality_count;
        counts.corollary_condition_met += o.counts.corollary_condition_met;
        violations.extend(o.violations);
    }
    let random = cfg.mode == Mode::Random;
    Ok(VerificationReport {
        config: ConfigSummary {
            n: cfg.n,
            mode: if random { "random" } else { "exhaustive" },
            seed: random.then_some(cfg.seed),
            sample_count: random.then_some(cfg.sample_count),
            max_generator_count: random.then_some(cfg.max_generator_count),
            check_mu: opts.check_mu,
        },
        counts,
        violations,
        runtime_seconds: start.elapsed().as_secs_f64(),
    })
}
