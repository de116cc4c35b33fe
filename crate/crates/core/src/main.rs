//! Single command-line entry point: construction generators, censuses,
//! rainbow checks, the greedy lemma path, exact extremal values and scaling
//! fits. Machine output is JSON on stdout (with the run manifest echoed
//! into every object); human tables go to stdout ahead of the JSON.
//!
//! Exit codes: 0 success, 2 invalid input, 3 budget cut the computation,
//! 4 internal invariant failure.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use rainbow_turan::census::{self, CensusError, CensusOptions};
use rainbow_turan::cge;
use rainbow_turan::constructions::{self, Construction, ConstructionSpec, Family};
use rainbow_turan::fit;
use rainbow_turan::graph::ColoredGraph;
use rainbow_turan::lemma::{LemmaError, LemmaInstance};
use rainbow_turan::oracle::{self, ExtremalStatus, SearchBudget};
use rainbow_turan::pattern::Pattern;

#[derive(Parser)]
#[command(
    name = "rbturan",
    version,
    about = "Rainbow Turán toolkit: extremal colored constructions, pattern censuses, exact tiny-scale search"
)]
struct Cli {
    /// Worker threads for copy counting; 1 keeps runs fully reproducible.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Seed recorded in the run manifest for randomized property modes.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an extremal colored graph and write it as CGE.
    Construct(ConstructArgs),
    /// Count copies of a pattern in a CGE file (full census report).
    Count(CensusArgs),
    /// Decide whether a properly colored CGE file contains a rainbow copy.
    RainbowCheck(CensusArgs),
    /// Exact extremal value ex(n, H, rainbow-F) by exhaustive search.
    Oracle(OracleArgs),
    /// Run the greedy rainbow alternating-path step on a CGE file.
    LemmaPath(LemmaArgs),
    /// Generate, census and fit the growth exponent over a list of sizes.
    Scaling(ScalingArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliFamily {
    PathLower,
    OddCycleLower,
    EvenCycleLower,
    C4Lower,
    DisjointComponents,
    TreeLower,
    TreeLeafBlowup,
    TreeStarCase,
    TreeBarePath,
    CliqueLower,
    P4Extremal,
}

#[derive(Args)]
struct FamilyParams {
    /// Path length / cycle half-length parameter, where applicable.
    #[arg(long)]
    k: Option<usize>,

    /// Clique order for clique-lower.
    #[arg(long)]
    r: Option<usize>,

    /// Pattern argument (family shorthand like P6, S2.3, M2, or an edge
    /// list like 0-1,1-2) for the pattern-driven families.
    #[arg(long)]
    pattern: Option<String>,

    /// Class size override; derived as large as possible when absent.
    #[arg(long)]
    b: Option<usize>,
}

#[derive(Args)]
struct ConstructArgs {
    /// Which construction family to generate.
    #[arg(value_enum)]
    family: CliFamily,

    #[command(flatten)]
    params: FamilyParams,

    /// Vertex budget; the output never exceeds it.
    #[arg(long)]
    n: usize,

    /// Output CGE path.
    #[arg(long)]
    out: PathBuf,

    /// Also write a DOT rendering with color labels.
    #[arg(long)]
    emit_dot: Option<PathBuf>,
}

#[derive(Args)]
struct CensusArgs {
    /// Host graph in CGE format (`-` for stdin).
    input: PathBuf,

    /// Pattern shorthand or edge list.
    #[arg(long)]
    pattern: String,

    /// Node budget for the backtracking search.
    #[arg(long)]
    node_limit: Option<u64>,
}

#[derive(Args)]
struct OracleArgs {
    /// Host order.
    #[arg(long)]
    n: usize,

    /// Counted pattern H.
    #[arg(long)]
    h: String,

    /// Forbidden rainbow pattern F.
    #[arg(long)]
    f: String,

    /// Cap on host graphs examined.
    #[arg(long)]
    max_graphs: Option<u64>,

    /// Backtracking cap per host graph.
    #[arg(long)]
    max_coloring_nodes: Option<u64>,

    /// Enumerate all labeled hosts instead of canonical representatives.
    #[arg(long)]
    no_dedupe: bool,

    /// Wall-clock cap in seconds.
    #[arg(long, default_value_t = 3600)]
    time_limit_secs: u64,
}

#[derive(Args)]
struct LemmaArgs {
    /// Host graph in CGE format (`-` for stdin); must be totally colored.
    input: PathBuf,

    /// Anchor vertices v1..vk, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    anchors: Vec<usize>,

    /// Forbidden vertex set U, comma separated.
    #[arg(long, value_delimiter = ',')]
    forbid_vertices: Vec<usize>,

    /// Forbidden color set A, comma separated.
    #[arg(long, value_delimiter = ',')]
    forbid_colors: Vec<u32>,

    /// Attempt the greedy search even when the common-neighbor
    /// precondition fails.
    #[arg(long)]
    best_effort: bool,
}

#[derive(Args)]
struct ScalingArgs {
    /// Which construction family to scale.
    #[arg(value_enum)]
    family: CliFamily,

    #[command(flatten)]
    params: FamilyParams,

    /// Comma-separated list of vertex budgets (at least three).
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
}

// ---------------------------------------------------------------------------
// Error-to-exit-code mapping
// ---------------------------------------------------------------------------

struct CliFailure {
    code: i32,
    message: String,
}

impl CliFailure {
    fn invalid(message: impl Into<String>) -> CliFailure {
        CliFailure {
            code: 2,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> CliFailure {
        CliFailure {
            code: 4,
            message: message.into(),
        }
    }
}

macro_rules! invalid_input_from {
    ($($ty:ty),* $(,)?) => {$(
        impl From<$ty> for CliFailure {
            fn from(e: $ty) -> CliFailure {
                CliFailure::invalid(e.to_string())
            }
        }
    )*};
}

invalid_input_from!(
    rainbow_turan::graph::GraphError,
    rainbow_turan::pattern::PatternError,
    rainbow_turan::cge::CgeError,
    rainbow_turan::constructions::ConstructError,
    rainbow_turan::fit::FitError,
    std::io::Error,
);

impl From<CensusError> for CliFailure {
    fn from(e: CensusError) -> CliFailure {
        let code = match &e {
            CensusError::BudgetExhausted { .. } => 3,
            CensusError::Internal(_) | CensusError::VisitorAborted { .. } => 4,
            _ => 2,
        };
        CliFailure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<oracle::OracleError> for CliFailure {
    fn from(e: oracle::OracleError) -> CliFailure {
        match e {
            oracle::OracleError::Internal(message) => CliFailure::internal(message),
            oracle::OracleError::Census(inner) => CliFailure::from(inner),
            other => CliFailure::invalid(other.to_string()),
        }
    }
}

impl From<LemmaError> for CliFailure {
    fn from(e: LemmaError) -> CliFailure {
        let code = match &e {
            LemmaError::GuaranteeViolated { .. } => 4,
            _ => 2,
        };
        CliFailure {
            code,
            message: e.to_string(),
        }
    }
}

// ---------------------------------------------------------------------------
// Run manifest
// ---------------------------------------------------------------------------

/// Echoed into every JSON output; identical manifests plus identical inputs
/// give identical outputs.
#[derive(Serialize)]
struct RunManifest {
    subcommand: &'static str,
    argv: Vec<String>,
    inputs: Vec<String>,
    outputs: Vec<String>,
    seed: Option<u64>,
    threads: usize,
    version: &'static str,
}

impl RunManifest {
    fn new(subcommand: &'static str, cli: &Cli) -> RunManifest {
        RunManifest {
            subcommand,
            argv: std::env::args().skip(1).collect(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            seed: cli.seed,
            threads: cli.threads,
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

fn emit(manifest: &RunManifest, mut payload: Value) -> Result<(), CliFailure> {
    let object = payload
        .as_object_mut()
        .ok_or_else(|| CliFailure::internal("payload must be a JSON object"))?;
    object.insert(
        "manifest".into(),
        serde_json::to_value(manifest).map_err(|e| CliFailure::internal(e.to_string()))?,
    );
    println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    Ok(())
}

fn read_graph(path: &Path) -> Result<ColoredGraph, CliFailure> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path)?
    };
    Ok(cge::parse_cge(&text)?)
}

fn build_construction(
    family: CliFamily,
    params: &FamilyParams,
    n: usize,
) -> Result<Construction, CliFailure> {
    let pattern = match &params.pattern {
        Some(s) => Some(Pattern::parse(s)?),
        None => None,
    };
    if family == CliFamily::TreeLower {
        let tree = pattern.ok_or_else(|| {
            CliFailure::invalid("tree-lower needs a --pattern argument naming the tree")
        })?;
        return Ok(constructions::tree_lower_with(&tree, n, params.b)?);
    }
    let spec = ConstructionSpec {
        family: match family {
            CliFamily::PathLower => Family::PathLower,
            CliFamily::OddCycleLower => Family::OddCycleLower,
            CliFamily::EvenCycleLower => Family::EvenCycleLower,
            CliFamily::C4Lower => Family::C4Lower,
            CliFamily::DisjointComponents => Family::DisjointComponents,
            CliFamily::TreeLeafBlowup => Family::TreeLeafBlowup,
            CliFamily::TreeStarCase => Family::TreeStarCase,
            CliFamily::TreeBarePath => Family::TreeBarePath,
            CliFamily::CliqueLower => Family::CliqueLower,
            CliFamily::P4Extremal => Family::P4Extremal,
            CliFamily::TreeLower => unreachable!("handled above"),
        },
        k: params.k,
        r: params.r,
        pattern,
        n_target: n,
        b: params.b,
    };
    Ok(spec.build()?)
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn cmd_construct(cli: &Cli, args: &ConstructArgs) -> Result<i32, CliFailure> {
    let mut manifest = RunManifest::new("construct", cli);
    let built = build_construction(args.family, &args.params, args.n)?;
    let text = cge::write_cge(&built.graph);
    std::fs::write(&args.out, &text)?;
    manifest.outputs.push(args.out.display().to_string());
    if let Some(dot_path) = &args.emit_dot {
        let dot = cge::write_dot(&built.graph, "construction");
        std::fs::write(dot_path, dot)?;
        manifest.outputs.push(dot_path.display().to_string());
    }
    let payload = json!({
        "provenance": built.provenance,
        "out": args.out.display().to_string(),
        "n": built.graph.vertex_count(),
        "m": built.graph.edge_count(),
    });
    emit(&manifest, payload)?;
    Ok(0)
}

fn cmd_count(cli: &Cli, args: &CensusArgs) -> Result<i32, CliFailure> {
    let mut manifest = RunManifest::new("count", cli);
    manifest.inputs.push(args.input.display().to_string());
    let g = read_graph(&args.input)?;
    let h = Pattern::parse(&args.pattern)?;
    let opts = CensusOptions {
        node_limit: args.node_limit,
        threads: cli.threads,
    };
    let report = census::run_census(&g, &h, &opts)?;
    let payload = serde_json::to_value(&report).map_err(|e| CliFailure::internal(e.to_string()))?;
    emit(&manifest, payload)?;
    Ok(0)
}

fn cmd_rainbow_check(cli: &Cli, args: &CensusArgs) -> Result<i32, CliFailure> {
    let mut manifest = RunManifest::new("rainbow-check", cli);
    manifest.inputs.push(args.input.display().to_string());
    let g = read_graph(&args.input)?;
    let violations = g.validate_proper();
    if !violations.is_empty() {
        return Err(CliFailure::invalid(format!(
            "input is not properly colored: {} ({} violations in total)",
            violations[0],
            violations.len()
        )));
    }
    let h = Pattern::parse(&args.pattern)?;
    let opts = CensusOptions {
        node_limit: args.node_limit,
        threads: 1,
    };
    let witness = census::find_rainbow_copy_with(&g, &h, &opts)?;
    let payload = match &witness {
        Some(w) => json!({
            "pattern": h.name(),
            "rainbow_found": true,
            "witness_vertices": w.vertex_map,
            "witness_edges": w.edges.iter().map(|e| e.endpoints()).collect::<Vec<_>>(),
            "witness_colors": w.colors,
        }),
        None => json!({
            "pattern": h.name(),
            "rainbow_found": false,
            "witness_vertices": Value::Null,
            "witness_edges": Value::Null,
        }),
    };
    emit(&manifest, payload)?;
    Ok(0)
}

fn cmd_oracle(cli: &Cli, args: &OracleArgs) -> Result<i32, CliFailure> {
    let manifest = RunManifest::new("oracle", cli);
    let h = Pattern::parse(&args.h)?;
    let f = Pattern::parse(&args.f)?;
    let budget = SearchBudget {
        max_graphs: args.max_graphs.unwrap_or(u64::MAX),
        max_coloring_nodes: args.max_coloring_nodes.unwrap_or(u64::MAX),
        dedupe: !args.no_dedupe,
        time_limit: Duration::from_secs(args.time_limit_secs),
    };
    let result = oracle::exact_extremal(args.n, &h, &f, &budget)?;
    let (status, binding) = match &result.status {
        ExtremalStatus::Exact => ("exact", Value::Null),
        ExtremalStatus::Incomplete { binding } => {
            ("incomplete", Value::String(binding.as_str().into()))
        }
    };
    let payload = json!({
        "n": result.n,
        "h": h.name(),
        "f": f.name(),
        "value": result.value,
        "status": status,
        "binding": binding,
        "graphs_examined": result.graphs_examined,
        "witness_cge": result.witness.as_ref().map(cge::write_cge),
    });
    emit(&manifest, payload)?;
    Ok(if status == "incomplete" { 3 } else { 0 })
}

fn cmd_lemma_path(cli: &Cli, args: &LemmaArgs) -> Result<i32, CliFailure> {
    let mut manifest = RunManifest::new("lemma-path", cli);
    manifest.inputs.push(args.input.display().to_string());
    let g = read_graph(&args.input)?;
    let inst = LemmaInstance::new(&g, &args.anchors, &args.forbid_vertices, &args.forbid_colors)?;
    let bound = inst.common_neighbor_bound();
    match inst.find_rainbow_alternating_path(args.best_effort) {
        Ok(path) => {
            let payload = json!({
                "found": true,
                "vertices": path.vertices,
                "colors": path.colors,
                "bound": bound,
                "precondition_ok": path.precondition_ok,
                "max_forbidden_observed": path.max_forbidden_observed,
            });
            emit(&manifest, payload)?;
            Ok(0)
        }
        Err(LemmaError::NotFound {
            stuck_index,
            candidates,
        }) => {
            let payload = json!({
                "found": false,
                "stuck_index": stuck_index,
                "candidates_at_stuck_step": candidates,
                "bound": bound,
                "precondition_ok": false,
            });
            emit(&manifest, payload)?;
            Ok(0)
        }
        Err(LemmaError::PreconditionViolated {
            pair_index,
            common,
            required,
        }) => {
            let payload = json!({
                "found": false,
                "precondition_ok": false,
                "violation": {
                    "pair_index": pair_index,
                    "common_neighbors": common,
                    "required": required,
                },
                "bound": bound,
                "note": "rerun with --best-effort to attempt the greedy search anyway",
            });
            emit(&manifest, payload)?;
            Ok(2)
        }
        Err(e) => Err(CliFailure::from(e)),
    }
}

fn cmd_scaling(cli: &Cli, args: &ScalingArgs) -> Result<i32, CliFailure> {
    let manifest = RunManifest::new("scaling", cli);
    if args.n.len() < 3 {
        return Err(CliFailure::invalid(
            "scaling needs at least three sizes to fit a slope",
        ));
    }
    // Class sizes scale proportionally across the series (b = c·n with one
    // constant, fixed by the smallest budget), so the fitted exponent is
    // not tilted by the skeleton's additive offset. The fit runs against
    // the budget n, the argument of the extremal function.
    let n_min = *args.n.iter().min().expect("nonempty");
    let smallest = build_construction(args.family, &args.params, n_min)?;
    let b_min = smallest.provenance.b;
    let mut points = Vec::new();
    println!("{:>10} {:>8} {:>6} {:>14}", "n_target", "n", "b", "count");
    for &n_target in &args.n {
        let b_for_size = match (args.params.b, b_min) {
            (Some(b), _) => Some(b),
            (None, Some(b_min)) => Some((b_min as usize).max(1) * n_target / n_min),
            (None, None) => None,
        };
        let params = FamilyParams {
            k: args.params.k,
            r: args.params.r,
            pattern: args.params.pattern.clone(),
            b: b_for_size,
        };
        let built = build_construction(args.family, &params, n_target)?;
        let opts = CensusOptions {
            node_limit: None,
            threads: cli.threads,
        };
        let count = census::count_copies_with(&built.graph, &built.target, &opts)?;
        let n_actual = built.graph.vertex_count();
        let b = built.provenance.b;
        println!(
            "{:>10} {:>8} {:>6} {:>14}",
            n_target,
            n_actual,
            b.map_or("-".to_string(), |v| v.to_string()),
            count
        );
        points.push((n_target, n_actual, b, count));
    }
    let series: Vec<(u64, u64)> = points
        .iter()
        .map(|&(n_target, _, _, count)| (n_target as u64, count))
        .collect();
    let fit = fit::fit_exponent(&series)?;
    println!();
    let payload = json!({
        "points": points
            .iter()
            .map(|&(n_target, n, b, count)| json!({
                "n_target": n_target,
                "n": n,
                "b": b,
                "count": count,
            }))
            .collect::<Vec<_>>(),
        "slope": fit.slope,
        "intercept": fit.intercept,
        "residual": fit.residual,
    });
    emit(&manifest, payload)?;
    Ok(0)
}

fn dispatch(cli: Cli) -> Result<i32, CliFailure> {
    match &cli.command {
        Command::Construct(args) => cmd_construct(&cli, args),
        Command::Count(args) => cmd_count(&cli, args),
        Command::RainbowCheck(args) => cmd_rainbow_check(&cli, args),
        Command::Oracle(args) => cmd_oracle(&cli, args),
        Command::LemmaPath(args) => cmd_lemma_path(&cli, args),
        Command::Scaling(args) => cmd_scaling(&cli, args),
    }
}

fn main() {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => std::process::exit(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            std::process::exit(failure.code);
        }
    }
}
