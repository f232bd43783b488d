//! The `solve`, `check`, `oracle`, `recommend` and `bench` commands. Each
//! returns the JSON lines it prints and its exit code.

use std::cmp::Ordering;
use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use posp_core::algorithms::oracle::DEFAULT_BUDGET;
use posp_core::algorithms::{
    bellman_solve, brute_force_frontier, mda_solve, Algorithm, OracleOptions, SolveError, SolveOptions, SolveResult,
    Stats, Status, Variant,
};
use posp_core::batch;
use posp_core::conditions::{
    check, close, evaluate, recommend_algorithm, Bounds, Condition, ConditionReport, Relation, Verdict, DEFAULT_DEPTH,
};
use posp_core::random::{generate, Structure};
use posp_core::suite;
use posp_core::weights::any::{AnySpace, AnyWeight};
use posp_core::{ComparisonResult, CoreError, Instance, PropertySet, VertexId, WeightSpace};

use crate::document::{parse_instance, read_document, InstanceDocument};
use crate::render;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_NO_ALGORITHM: i32 = 3;
pub const EXIT_GUARD: i32 = 4;
pub const EXIT_VIOLATION: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "posp", version, about = "Shortest paths under partially ordered weights")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve an instance with a label-correcting or label-setting solver.
    Solve(SolveArgs),
    /// Test optimality conditions up to a path-length bound.
    Check(CheckArgs),
    /// Enumerate all walks up to a length and keep the efficient ones.
    Oracle(OracleArgs),
    /// Show which solvers the declared properties justify.
    Recommend(RecommendArgs),
    /// Emit statistics records for a benchmark suite.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    Bellman,
    Mda,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Min,
    Max,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Min => Variant::Min,
            VariantArg::Max => Variant::Max,
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub file: PathBuf,
    #[arg(long, value_enum)]
    pub algorithm: Option<AlgorithmArg>,
    #[arg(long, value_enum)]
    pub variant: Option<VariantArg>,
    /// Run even if no recommendation row covers the request.
    #[arg(long)]
    pub force: bool,
    #[arg(long)]
    pub max_iterations: Option<usize>,
    #[arg(long)]
    pub drop_infeasible: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub file: PathBuf,
    #[arg(long, default_value_t = DEFAULT_DEPTH)]
    pub depth: usize,
    /// Comma-separated condition names, or `all`.
    #[arg(long, default_value = "all")]
    pub conditions: String,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    pub file: PathBuf,
    #[arg(long, default_value_t = suite::ORACLE_DEPTH)]
    pub max_len: usize,
    #[arg(long, value_enum, default_value = "min")]
    pub variant: VariantArg,
    #[arg(long)]
    pub drop_infeasible: bool,
}

#[derive(Debug, Args)]
pub struct RecommendArgs {
    pub file: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    KnWorstCase,
    Random,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub suite: SuiteArg,
    /// Vertices of the complete digraph.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Length at which worst-case weights collapse.
    #[arg(long, default_value_t = 3)]
    pub m: usize,
    /// Comma-separated structure names, or `all`.
    #[arg(long, default_value = "all")]
    pub structures: String,
    #[arg(long, default_value_t = 10)]
    pub count: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "auto")]
    pub algorithm: AlgorithmArg,
    /// Add wall-clock times, which makes output vary between runs.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn validation(m: impl fmt::Display) -> CliError {
        CliError {
            code: EXIT_VALIDATION,
            message: m.to_string(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> CliError {
        let code = match e {
            CoreError::BudgetExceeded { .. } => EXIT_GUARD,
            _ => EXIT_VALIDATION,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> CliError {
        match e {
            SolveError::Core(c) => c.into(),
            other => CliError {
                code: 1,
                message: other.to_string(),
            },
        }
    }
}

/// What a command prints on stdout, one JSON document per line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub lines: Vec<String>,
    pub code: i32,
}

impl Output {
    fn one(doc: Value, code: i32) -> Output {
        Output {
            lines: vec![doc.to_string()],
            code,
        }
    }

    pub fn text(&self) -> String {
        self.lines.iter().map(|l| format!("{l}\n")).collect()
    }
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Solve(a) => solve(&a),
        Command::Check(a) => check_cmd(&a),
        Command::Oracle(a) => oracle(&a),
        Command::Recommend(a) => recommend(&a),
        Command::Bench(a) => bench(&a),
    }
}

fn budget() -> Result<usize, CliError> {
    match std::env::var("POSP_BUDGET") {
        Ok(v) => v
            .parse()
            .map_err(|_| CliError::validation(format!("POSP_BUDGET must be a positive integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

pub fn load(path: &Path) -> Result<(InstanceDocument, Instance<AnySpace>), CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::validation(format!("{}: {e}", path.display())))?;
    let doc = read_document(&text).map_err(|e| CliError::validation(format!("{}: {e}", path.display())))?;
    let inst = parse_instance(&doc).map_err(|e| CliError::validation(format!("{}: {e}", path.display())))?;
    Ok((doc, inst))
}

fn parse_variant(s: &str) -> Result<Variant, CliError> {
    s.parse()
        .map_err(|_| CliError::validation(format!("options.variant: unknown variant `{s}`")))
}

fn parse_algorithm(s: &str) -> Result<AlgorithmArg, CliError> {
    AlgorithmArg::from_str(s, true)
        .map_err(|_| CliError::validation(format!("options.algorithm: unknown algorithm `{s}`")))
}

fn names(props: PropertySet) -> Vec<&'static str> {
    props.iter().map(|p| p.name()).collect()
}

/// Picks the solver; `auto` prefers the label-setting one, whose work
/// tracks the output size.
fn choose(
    requested: AlgorithmArg,
    props: PropertySet,
    variant: Variant,
    force: bool,
) -> Result<(Algorithm, Vec<usize>), CliError> {
    let rows = recommend_algorithm(props, variant);
    let numbers =
        |alg: Algorithm| -> Vec<usize> { rows.iter().filter(|r| r.algorithm == alg).map(|r| r.number).collect() };
    let pick = match requested {
        AlgorithmArg::Bellman => Some(Algorithm::Bellman),
        AlgorithmArg::Mda => Some(Algorithm::Mda),
        AlgorithmArg::Auto if !numbers(Algorithm::Mda).is_empty() => Some(Algorithm::Mda),
        AlgorithmArg::Auto if !numbers(Algorithm::Bellman).is_empty() => Some(Algorithm::Bellman),
        AlgorithmArg::Auto => None,
    };
    match pick {
        Some(alg) if !numbers(alg).is_empty() => Ok((alg, numbers(alg))),
        Some(alg) if force => Ok((alg, vec![])),
        None if force => Ok((Algorithm::Bellman, vec![])),
        _ => {
            let mut lines = vec![format!(
                "no recommendation row justifies {} for the {variant} variant; unmet requirements:",
                pick.map_or("any solver".to_string(), |a| a.to_string())
            )];
            for r in evaluate(props) {
                let relevant = r.row.guarantee.variant() == Some(variant) && pick.is_none_or(|a| a == r.row.algorithm);
                if relevant {
                    lines.push(format!(
                        "  row {} ({}): missing {}",
                        r.row.number,
                        r.row.algorithm,
                        names(r.missing).join(", ")
                    ));
                }
            }
            lines.push("use --force to run anyway".into());
            Err(CliError {
                code: EXIT_NO_ALGORITHM,
                message: lines.join("\n"),
            })
        }
    }
}

struct Entry {
    weight: AnyWeight,
    path: Vec<VertexId>,
}

/// Per-vertex entries in leo order, falling back to rendered weights, then
/// paths.
fn frontiers(space: &AnySpace, per_vertex: Vec<Vec<Entry>>) -> Value {
    let docs: Vec<Value> = per_vertex
        .into_iter()
        .enumerate()
        .map(|(v, mut entries)| {
            let keyed: Vec<String> = entries
                .iter()
                .map(|e| render::weight(space, &e.weight).to_string())
                .collect();
            let mut order: Vec<usize> = (0..entries.len()).collect();
            order.sort_by(|&i, &j| {
                let (a, b) = (&entries[i], &entries[j]);
                space
                    .leo_cmp(&a.weight, &b.weight)
                    .unwrap_or(Ordering::Equal)
                    .then_with(|| keyed[i].cmp(&keyed[j]))
                    .then_with(|| a.path.cmp(&b.path))
            });
            let mut slots: Vec<Option<Entry>> = entries.drain(..).map(Some).collect();
            let list: Vec<Value> = order
                .into_iter()
                .map(|i| {
                    let e = slots[i].take().expect("each index once");
                    json!({
                        "weight": render::weight(space, &e.weight),
                        "path": e.path,
                        "length": e.path.len().saturating_sub(1),
                        "feasible": space.is_feasible(&e.weight),
                    })
                })
                .collect();
            json!({ "vertex": v, "entries": list })
        })
        .collect();
    Value::Array(docs)
}

fn stats_doc(s: &Stats, labels: usize) -> Value {
    json!({
        "iterations": s.iterations,
        "extractions": s.extractions,
        "insertions": s.insertions,
        "comparisons": s.comparisons,
        "merges": s.merges,
        "leo_calls": s.leo_calls,
        "labels": labels,
        "frontier_sizes": s.frontier_sizes,
        "leo_order_violations": s.leo_order_violations,
        "vertex_leo_order_violations": s.vertex_leo_order_violations,
        "label_setting_violations": s.label_setting_violations,
    })
}

fn result_entries(inst: &Instance<AnySpace>, r: &SolveResult<AnyWeight>) -> Vec<Vec<Entry>> {
    (0..inst.graph().vertex_count())
        .map(|v| {
            r.frontiers[v]
                .iter()
                .map(|&id| Entry {
                    weight: r.store.weight(id).clone(),
                    path: r.store.reconstruct_path(id),
                })
                .collect()
        })
        .collect()
}

pub fn solve(a: &SolveArgs) -> Result<Output, CliError> {
    let (doc, inst) = load(&a.file)?;
    let defaults = doc.options.clone().unwrap_or_default();
    let variant = match (a.variant, &defaults.variant) {
        (Some(v), _) => v.into(),
        (None, Some(s)) => parse_variant(s)?,
        (None, None) => Variant::Min,
    };
    let requested = match (a.algorithm, &defaults.algorithm) {
        (Some(x), _) => x,
        (None, Some(s)) => parse_algorithm(s)?,
        (None, None) => AlgorithmArg::Auto,
    };
    let (algorithm, rows) = choose(requested, inst.declared(), variant, a.force)?;
    let opts = SolveOptions {
        max_iterations: a.max_iterations.or(defaults.max_iterations),
        drop_infeasible: a.drop_infeasible || defaults.drop_infeasible.unwrap_or(false),
        // a forced run reports violations instead of stopping at the first
        abort_on_violation: !rows.is_empty(),
        ..SolveOptions::new(variant)
    };
    let r = match algorithm {
        Algorithm::Bellman => bellman_solve(&inst, &opts)?,
        Algorithm::Mda => mda_solve(&inst, &opts)?,
    };
    let converged = r.status == Status::Converged;
    let out = json!({
        "command": "solve",
        "algorithm": algorithm.to_string(),
        "variant": variant.to_string(),
        "forced": rows.is_empty(),
        "rows": rows,
        "status": if converged { "converged" } else { "iteration-guard-hit" },
        "final": converged,
        "frontiers": frontiers(inst.space(), result_entries(&inst, &r)),
        "stats": stats_doc(&r.stats, r.label_count()),
    });
    Ok(Output::one(out, if converged { EXIT_OK } else { EXIT_GUARD }))
}

pub fn oracle(a: &OracleArgs) -> Result<Output, CliError> {
    let (_, inst) = load(&a.file)?;
    let variant: Variant = a.variant.into();
    let opts = OracleOptions {
        budget: budget()?,
        drop_infeasible: a.drop_infeasible,
    };
    let r = brute_force_frontier(&inst, a.max_len, variant, &opts)?;
    let per_vertex = r
        .frontiers
        .iter()
        .map(|entries| {
            entries
                .iter()
                .flat_map(|e| {
                    // one path per weight for the minimal variant, all of them otherwise
                    let take = if variant == Variant::Min { 1 } else { e.paths.len() };
                    e.paths.iter().take(take).map(|p| Entry {
                        weight: e.weight.clone(),
                        path: p.clone(),
                    })
                })
                .collect()
        })
        .collect();
    let out = json!({
        "command": "oracle",
        "variant": variant.to_string(),
        "max_len": a.max_len,
        "enumerated": r.enumerated,
        "frontiers": frontiers(inst.space(), per_vertex),
    });
    Ok(Output::one(out, EXIT_OK))
}

fn comparison_name(r: ComparisonResult) -> &'static str {
    match r {
        ComparisonResult::Less => "less",
        ComparisonResult::Equal => "equal",
        ComparisonResult::Greater => "greater",
        ComparisonResult::Incomparable => "incomparable",
    }
}

fn report_doc(space: &AnySpace, report: &ConditionReport<AnyWeight>, declared: bool) -> Value {
    let mut doc = json!({
        "condition": report.condition.name(),
        "declared": declared,
    });
    match &report.verdict {
        Verdict::HoldsToDepth(d) => {
            doc["status"] = json!("holds");
            doc["depth"] = json!(d);
        }
        Verdict::Violated(w) => {
            doc["status"] = json!("violated");
            let comparisons: Vec<Value> = w
                .comparisons
                .iter()
                .map(|c| {
                    json!({
                        "left": c.left,
                        "right": c.right,
                        "relation": match c.relation { Relation::Order => "order", Relation::Leo => "leo" },
                        "result": comparison_name(c.result),
                    })
                })
                .collect();
            doc["witness"] = json!({
                "paths": w.paths,
                "weights": w.weights.iter().map(|x| render::weight(space, x)).collect::<Vec<_>>(),
                "arc": w.arc,
                "comparisons": comparisons,
                "clause": w.clause.map(|c| c.name()),
            });
        }
    }
    doc
}

pub fn parse_conditions(list: &str) -> Result<Vec<Condition>, CliError> {
    if list.trim() == "all" {
        return Ok(Condition::ALL.to_vec());
    }
    list.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| CliError::validation(format!("--conditions: unknown condition `{}`", s.trim())))
        })
        .collect()
}

pub fn check_cmd(a: &CheckArgs) -> Result<Output, CliError> {
    let (_, inst) = load(&a.file)?;
    let conditions = parse_conditions(&a.conditions)?;
    let bounds = Bounds {
        depth: a.depth,
        budget: budget()?,
    };
    let closed = close(inst.declared());
    let mut violated_declared = false;
    let reports: Vec<Value> = conditions
        .iter()
        .map(|&c| {
            let declared = c.property().is_some_and(|p| closed.contains(p));
            match check(&inst, c, bounds) {
                Ok(r) => {
                    violated_declared |= declared && !r.holds();
                    report_doc(inst.space(), &r, declared)
                }
                Err(e) => json!({
                    "condition": c.name(),
                    "declared": declared,
                    "status": match e { CoreError::BudgetExceeded { .. } => "budget-exceeded", _ => "error" },
                    "error": e.to_string(),
                }),
            }
        })
        .collect();
    let out = json!({
        "command": "check",
        "depth": a.depth,
        "declared": names(inst.declared()),
        "reports": reports,
    });
    Ok(Output::one(
        out,
        if violated_declared { EXIT_VIOLATION } else { EXIT_OK },
    ))
}

pub fn recommend(a: &RecommendArgs) -> Result<Output, CliError> {
    let (_, inst) = load(&a.file)?;
    let props = inst.declared();
    let rows: Vec<Value> = evaluate(props)
        .into_iter()
        .map(|r| {
            json!({
                "row": r.row.number,
                "algorithm": r.row.algorithm.to_string(),
                "guarantee": r.row.guarantee.name(),
                "required": r.row.required.iter().map(|p| p.name()).collect::<Vec<_>>(),
                "implied": r.row.implied.iter().map(|p| p.name()).collect::<Vec<_>>(),
                "grounds": r.row.grounds,
                "satisfied": r.satisfied,
                "missing": names(r.missing),
            })
        })
        .collect();
    let pick = |v: Variant| -> Vec<Value> {
        recommend_algorithm(props, v)
            .into_iter()
            .map(|r| json!({ "row": r.number, "algorithm": r.algorithm.to_string() }))
            .collect()
    };
    let out = json!({
        "command": "recommend",
        "declared": names(props),
        "closed": names(close(props)),
        "recommended": { "min": pick(Variant::Min), "max": pick(Variant::Max) },
        "rows": rows,
    });
    Ok(Output::one(out, EXIT_OK))
}

fn parse_structures(list: &str) -> Result<Vec<Structure>, CliError> {
    if list.trim() == "all" {
        return Ok(Structure::ALL.to_vec());
    }
    list.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| CliError::validation(format!("--structures: unknown structure `{}`", s.trim())))
        })
        .collect()
}

pub fn bench(a: &BenchArgs) -> Result<Output, CliError> {
    match a.suite {
        SuiteArg::KnWorstCase => bench_kn(a),
        SuiteArg::Random => bench_random(a),
    }
}

fn bench_kn(a: &BenchArgs) -> Result<Output, CliError> {
    if a.n == 0 || a.m == 0 {
        return Err(CliError::validation("--n and --m must be positive"));
    }
    let start = Instant::now();
    let o = suite::kn_worst_case(a.n, a.m);
    let elapsed = start.elapsed();
    let mut lines = Vec::new();
    for (k, sizes) in o.sizes.iter().enumerate() {
        let it = k + 1;
        let predicted = (it < a.m).then(|| suite::predicted_kn_total(a.n, it));
        lines.push(
            json!({
                "suite": "kn-worst-case",
                "n": a.n,
                "m": a.m,
                "iteration": it,
                "frontier_sizes": sizes,
                "labels": o.totals[k],
                "predicted": predicted,
            })
            .to_string(),
        );
    }
    let mut summary = json!({
        "suite": "kn-worst-case",
        "n": a.n,
        "m": a.m,
        "summary": true,
        "iterations": o.iterations,
        "comparisons": o.comparisons,
        "counts_match": o.counts_match(),
        "final_single_zero": o.final_ok,
    });
    if a.timing {
        summary["wall_us"] = json!(elapsed.as_micros() as u64);
    }
    lines.push(summary.to_string());
    Ok(Output { lines, code: EXIT_OK })
}

fn bench_random(a: &BenchArgs) -> Result<Output, CliError> {
    let structures = parse_structures(&a.structures)?;
    let jobs: Vec<(Structure, u64)> = structures
        .iter()
        .flat_map(|&s| (a.seed..a.seed + a.count).map(move |seed| (s, seed)))
        .collect();
    let records = batch::map(&jobs, |&(s, seed)| -> Result<Value, CliError> {
        let inst = generate(s, seed);
        let (alg, _) = choose(a.algorithm, inst.declared(), Variant::Min, true)?;
        let start = Instant::now();
        let r = batch::solve(&inst, alg, &SolveOptions::new(Variant::Min))?;
        let elapsed = start.elapsed();
        let mut doc = json!({
            "suite": "random",
            "structure": s.name(),
            "seed": seed,
            "vertices": inst.graph().vertex_count(),
            "arcs": inst.graph().arc_count(),
            "algorithm": alg.to_string(),
            "iterations": r.stats.iterations,
            "extractions": r.stats.extractions,
            "comparisons": r.stats.comparisons,
            "labels": r.label_count(),
            "frontier_total": r.frontiers.iter().map(Vec::len).sum::<usize>(),
        });
        if a.timing {
            doc["wall_us"] = json!(elapsed.as_micros() as u64);
        }
        Ok(doc)
    });
    let lines = records
        .into_iter()
        .map(|r| r.map(|d| d.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Output { lines, code: EXIT_OK })
}
