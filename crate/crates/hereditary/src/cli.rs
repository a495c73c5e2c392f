//! Command-line interface.
//!
//! Exit codes: 0 on success, 1 when a check finds a violation, 2 on usage or
//! input errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hereditary_core::families::{
    acyclic_family, bounded_class_family, clique_family, maximal_generators, stable_set_family, threshold_family,
};
use hereditary_core::universe::{GeneratorConfig, Mode};
use hereditary_core::{
    check_corollary_concrete, check_corollary_gallai, classify_critical, critical_core, enumerate_min_covers,
    is_critical, min_cover, mu, structured_cover, verify_gallai_lemma, HereditaryHypergraph, LemmaReport,
    TheoremClassification, DEFAULT_ENUMERATION_LIMIT,
};
use serde_json::{json, Value};

use crate::harness::{verify_universe, VerifyOptions};
use crate::io::{self, hypergraph_to_json, HypergraphFile};
use crate::report;

#[derive(Debug, Parser)]
#[command(name = "hereditary", version, about = "Minimum covers and critical structure of hereditary hypergraphs")]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimum cover number and a witness partition.
    Rho { file: PathBuf },
    /// Most vertices covered by non-singleton parts.
    Mu(MuArgs),
    /// Cover computations.
    #[command(subcommand)]
    Cover(CoverCommand),
    /// Criticality checks.
    #[command(subcommand)]
    Critical(CriticalCommand),
    /// Classification of connected critical instances.
    #[command(subcommand)]
    Theorem(TheoremCommand),
    /// Both size-condition corollaries on one hypergraph.
    Corollary { file: PathBuf },
    /// Build a hereditary hypergraph from a graph family.
    Family(FamilyArgs),
    /// Batch verification over generated hypergraphs.
    Verify(VerifyArgs),
    /// Check Gallai's lemma on a graph file.
    Lemma { file: PathBuf },
}

#[derive(Debug, Args)]
pub struct MuArgs {
    /// Maximise over minimum covers only.
    #[arg(long)]
    pub min_covers: bool,
    pub file: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum CoverCommand {
    Rho {
        file: PathBuf,
    },
    /// List minimum covers.
    Enumerate {
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
        limit: usize,
        file: PathBuf,
    },
    Mu(MuArgs),
}

#[derive(Debug, Subcommand)]
pub enum CriticalCommand {
    Check {
        file: PathBuf,
    },
    /// Delete vertices while the cover number stays put.
    Core {
        file: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum TheoremCommand {
    Classify {
        file: PathBuf,
    },
    StructuredCover {
        #[arg(long)]
        vertex: usize,
        file: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyKind {
    Stable,
    Clique,
    Acyclic,
    Bounded,
    Threshold,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BaseKind {
    Stable,
    Clique,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    pub kind: FamilyKind,
    /// Graph file (digraph for `acyclic`, weighted graph for `threshold`).
    #[arg(long)]
    pub input: PathBuf,
    /// Class size bound for `bounded`.
    #[arg(long)]
    pub k: Option<usize>,
    /// Base family for `bounded`.
    #[arg(long, value_enum, default_value_t = BaseKind::Stable)]
    pub base: BaseKind,
    /// Weight bound for `threshold`.
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Output path; standard output if absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Every hypergraph on n vertices (n <= 5).
    #[arg(long, conflicts_with = "random")]
    pub exhaustive: bool,
    /// Seeded random sample.
    #[arg(long)]
    pub random: bool,
    #[arg(short, long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    /// Most subsets drawn per random instance (default n + 2).
    #[arg(long)]
    pub max_generators: Option<usize>,
    /// Also check that mu is the same over all and over minimum covers.
    #[arg(long)]
    pub mu: bool,
    /// Worker threads.
    #[arg(long)]
    pub workers: Option<usize>,
    /// Write runtime_seconds as 0 for byte-reproducible reports.
    #[arg(long)]
    pub no_timing: bool,
}

/// What a command produced: JSON for `--json`, text otherwise.
struct Output {
    json: Value,
    text: String,
    violation: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, violation: false }
    }
}

fn load(path: &Path) -> anyhow::Result<HereditaryHypergraph> {
    io::read_hypergraph(path).with_context(|| format!("reading {}", path.display()))
}

fn cmd_rho(file: &Path) -> anyhow::Result<Output> {
    let h = load(file)?;
    let c = min_cover(&h);
    Ok(Output::ok(
        json!({"rho": c.len(), "witness": report::cover(&c)}),
        format!("rho = {}\nwitness: {}", c.len(), report::cover(&c)),
    ))
}

fn cmd_mu(args: &MuArgs) -> anyhow::Result<Output> {
    let h = load(&args.file)?;
    let (m, w) = mu(&h, args.min_covers);
    Ok(Output::ok(
        json!({"mu": m, "over_min_covers": args.min_covers, "witness": report::cover(&w)}),
        format!("mu = {m}\nwitness: {}", report::cover(&w)),
    ))
}

fn cmd_enumerate(file: &Path, limit: usize) -> anyhow::Result<Output> {
    if limit == 0 {
        bail!("--limit must be at least 1");
    }
    let h = load(file)?;
    let e = enumerate_min_covers(&h, limit);
    let mut text = format!(
        "rho = {}, {} minimum covers{}\n",
        e.rho,
        e.covers.len(),
        if e.truncated { " (truncated)" } else { "" }
    );
    for c in &e.covers {
        text.push_str(&format!("{}\n", report::cover(c)));
    }
    Ok(Output::ok(report::enumeration(&e), text.trim_end().into()))
}

fn cmd_critical_check(file: &Path) -> anyhow::Result<Output> {
    let h = load(file)?;
    let r = is_critical(&h);
    let text = if r.is_critical() {
        format!("critical (rho = {})", r.rho)
    } else {
        format!("not critical (rho = {}); rho unchanged after deleting {:?}", r.rho, r.failing_vertices)
    };
    Ok(Output::ok(report::criticality(&r), text))
}

fn cmd_critical_core(file: &Path) -> anyhow::Result<Output> {
    let h = load(file)?;
    let c = critical_core(&h);
    let core_file = HypergraphFile::from_hypergraph(&c.core);
    Ok(Output::ok(
        json!({
            "deleted": c.deleted,
            "vertices": report::set(c.core.vertices()),
            "core": core_file,
        }),
        format!("deleted {:?}\ncore: {}", c.deleted, hypergraph_to_json(&c.core)),
    ))
}

fn cmd_classify(file: &Path) -> anyhow::Result<Output> {
    let h = load(file)?;
    Ok(match classify_critical(&h) {
        Ok(c) => {
            let text = match &c {
                TheoremClassification::NotApplicable(r) => format!("not applicable: {r}"),
                TheoremClassification::Strict { rho, cover } => {
                    format!(
                        "strict: rho = {rho} < (n+1)/2 = {}/2\nsingleton-free minimum cover: {}",
                        h.vertex_count() + 1,
                        report::cover(cover)
                    )
                }
                TheoremClassification::Equality { rho, structured_covers, .. } => {
                    let mut t = format!("equality: rho = {rho} = (n+1)/2, edge graph factor-critical\n");
                    for (v, c) in structured_covers {
                        t.push_str(&format!("  {v}: {}\n", report::cover(c)));
                    }
                    t.trim_end().into()
                }
            };
            Output::ok(report::classification(&c), text)
        }
        Err(v) => Output {
            json: json!({"case": "violation", "violation": report::violation(&v)}),
            text: format!("VIOLATION {v}"),
            violation: true,
        },
    })
}

fn cmd_structured(file: &Path, vertex: usize) -> anyhow::Result<Output> {
    let h = load(file)?;
    let c = structured_cover(&h, vertex)?;
    Ok(Output::ok(json!({"vertex": vertex, "cover": report::cover(&c)}), format!("{}", report::cover(&c))))
}

fn cmd_corollary(file: &Path) -> anyhow::Result<Output> {
    let h = load(file)?;
    let gallai = check_corollary_gallai(&h);
    let (concrete, concrete_ok) = match check_corollary_concrete(&h) {
        Ok(w) => (
            json!({
                "critical_vertex": w.critical_vertex,
                "bipartition": w.bipartition.map(|(a, b)| [report::set(a), report::set(b)]),
                "holds": w.holds(),
            }),
            w.holds(),
        ),
        Err(e) => (json!({"condition_met": false, "detail": e.to_string()}), true),
    };
    let violation = !gallai.holds() || !concrete_ok;
    let text = format!(
        "n = {}, rho = {}, condition n <= 2(rho-1): {}\nnot critical: {}\nnot connected: {}\n{}",
        gallai.n,
        gallai.rho,
        gallai.condition_met,
        gallai.not_critical.is_some(),
        gallai.not_connected.is_some(),
        if violation { "VIOLATION" } else { "holds" }
    );
    Ok(Output { json: json!({"gallai": report::gallai_corollary(&gallai), "concrete": concrete}), text, violation })
}

fn cmd_family(args: &FamilyArgs) -> anyhow::Result<Output> {
    let h = match args.kind {
        FamilyKind::Stable => maximal_generators(&stable_set_family(&io::read_graph(&args.input)?))?,
        FamilyKind::Clique => maximal_generators(&clique_family(&io::read_graph(&args.input)?))?,
        FamilyKind::Acyclic => maximal_generators(&acyclic_family(&io::read_digraph(&args.input)?))?,
        FamilyKind::Bounded => {
            let k = args.k.context("bounded family needs --k")?;
            let g = io::read_graph(&args.input)?;
            match args.base {
                BaseKind::Stable => maximal_generators(&bounded_class_family(stable_set_family(&g), k)?)?,
                BaseKind::Clique => maximal_generators(&bounded_class_family(clique_family(&g), k)?)?,
            }
        }
        FamilyKind::Threshold => {
            let lambda = args.lambda.context("threshold family needs --lambda")?;
            maximal_generators(&threshold_family(&io::read_weighted_graph(&args.input)?, lambda)?)?
        }
    };
    let body = hypergraph_to_json(&h);
    if let Some(out) = &args.out {
        fs::write(out, format!("{body}\n")).with_context(|| format!("writing {}", out.display()))?;
    }
    Ok(Output::ok(
        serde_json::to_value(HypergraphFile::from_hypergraph(&h))?,
        if args.out.is_some() { format!("{} generators written", h.generators().len()) } else { body },
    ))
}

fn cmd_verify(args: &VerifyArgs) -> anyhow::Result<Output> {
    let cfg = match (args.exhaustive, args.random) {
        (true, false) => GeneratorConfig::exhaustive(args.n),
        (false, true) => GeneratorConfig {
            n: args.n,
            mode: Mode::Random,
            seed: args.seed,
            sample_count: args.samples,
            max_generator_count: args.max_generators.unwrap_or(args.n + 2),
        },
        _ => bail!("choose one of --exhaustive or --random"),
    };
    let r = verify_universe(&cfg, VerifyOptions { check_mu: args.mu, workers: args.workers })?;
    let c = &r.counts;
    let mut text = format!(
        "{} instances, {} connected critical ({} strict, {} equality), {} meet the corollary condition, {} violations, {:.2}s",
        c.instances_checked,
        c.connected_critical_found,
        c.strict_count,
        c.equality_count,
        c.corollary_condition_met,
        r.violations.len(),
        r.runtime_seconds
    );
    for v in &r.violations {
        text.push_str(&format!(
            "\nVIOLATION [{}] expected {}, got {}: {}",
            v.stage,
            v.expected,
            v.got,
            serde_json::to_string(&v.instance)?
        ));
    }
    let json: Value = serde_json::from_str(&r.to_json(!args.no_timing))?;
    Ok(Output { json, text, violation: !r.passed() })
}

fn cmd_lemma(file: &Path) -> anyhow::Result<Output> {
    let g = io::read_graph(file).with_context(|| format!("reading {}", file.display()))?;
    let r = verify_gallai_lemma(&g);
    let text = match &r {
        LemmaReport::Holds { nu, .. } => format!("hypotheses hold; nu = {nu} = (n-1)/2"),
        LemmaReport::Violated { nu, n } => format!("VIOLATION: hypotheses hold but nu = {nu}, n = {n}"),
        LemmaReport::NotApplicable { nu, failure } => format!("not applicable (nu = {nu}): {failure:?}"),
    };
    Ok(Output { json: report::lemma(&r), violation: matches!(r, LemmaReport::Violated { .. }), text })
}

fn dispatch(cli: &Cli) -> anyhow::Result<Output> {
    match &cli.command {
        Command::Rho { file } | Command::Cover(CoverCommand::Rho { file }) => cmd_rho(file),
        Command::Mu(a) | Command::Cover(CoverCommand::Mu(a)) => cmd_mu(a),
        Command::Cover(CoverCommand::Enumerate { limit, file }) => cmd_enumerate(file, *limit),
        Command::Critical(CriticalCommand::Check { file }) => cmd_critical_check(file),
        Command::Critical(CriticalCommand::Core { file }) => cmd_critical_core(file),
        Command::Theorem(TheoremCommand::Classify { file }) => cmd_classify(file),
        Command::Theorem(TheoremCommand::StructuredCover { vertex, file }) => cmd_structured(file, *vertex),
        Command::Corollary { file } => cmd_corollary(file),
        Command::Family(a) => cmd_family(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Lemma { file } => cmd_lemma(file),
    }
}

/// Runs the CLI on `argv` (program name first), writing to the given
/// streams, and returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(stdout, "{e}");
            } else {
                let _ = write!(stderr, "{e}");
            }
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            let body = if cli.json { serde_json::to_string_pretty(&out.json).expect("json value") } else { out.text };
            let _ = writeln!(stdout, "{body}");
            i32::from(out.violation)
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            2
        }
    }
}
