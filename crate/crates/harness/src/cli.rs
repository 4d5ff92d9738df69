//! Command-line interface. `main` only parses arguments and maps errors to
//! exit codes; everything else lives here so tests can drive it directly.

use std::io::Write;
use std::path::{Path as FsPath, PathBuf};

use clap::{Args, Parser, Subcommand};
use rpaths_core::RpError;
use serde_json::json;
use thiserror::Error;

use crate::format::{parse_graph, write_graph, FormatError, Instance};
use crate::generate::{generate_graph, GenError, WeightMode};
use crate::report::{all_agree, diff, AlgoReport, Report};
use crate::runner::{run_one, Algo, Outcome, Settings};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// `verify` found an algorithm disagreeing with the oracle.
    pub const DISAGREEMENT: i32 = 1;
    /// Bad flags (reported by the argument parser).
    pub const USAGE: i32 = 2;
    pub const IO: i32 = 3;
    /// Malformed instance file.
    pub const PARSE: i32 = 4;
    /// Negative cycle, unreachable target, invalid algorithm parameter or
    /// failed generation.
    pub const ALGORITHM: i32 = 5;
}

#[derive(Debug, Parser)]
#[command(name = "rpaths", version, about = "Replacement paths on directed graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run algorithms on one instance and report replacement distances.
    Solve(RunArgs),
    /// Run algorithms plus the oracle; exit 1 on any disagreement.
    Verify(RunArgs),
    /// Write a random instance file.
    Gen(GenArgs),
    /// Time algorithms on generated instances of growing size.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Args)]
pub struct AlgoArgs {
    /// Algorithm to run.
    #[arg(long, value_enum, default_value_t = Algo::All)]
    pub algo: Algo,
    /// Seed for the randomized algorithms.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Short/long detour split exponent of `sampling`.
    #[arg(long, default_value_t = 0.5)]
    pub epsilon: f64,
    /// Hitting-set confidence constant of `sampling`.
    #[arg(long = "C", default_value_t = 3.0)]
    pub c: f64,
    /// Branching factor of `recursive` [default: max(2, ⌈log₂² n⌉)].
    #[arg(long = "Z")]
    pub z: Option<usize>,
    /// Path edges per piece for `dc` [default: ⌈√|P|⌉].
    #[arg(long)]
    pub bucket_size: Option<usize>,
    /// Write a JSON report to this file.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Report every timing as 0 so reports are byte-stable.
    #[arg(long)]
    pub no_timings: bool,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Instance file.
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub algo: AlgoArgs,
    /// Include one oracle witness path per edge.
    #[arg(long)]
    pub paths: bool,
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    /// Edge probability.
    #[arg(long, default_value_t = 0.1)]
    pub prob: f64,
    /// Weight bound.
    #[arg(long = "M", default_value_t = 10)]
    pub m: i64,
    #[arg(long, value_enum, default_value_t = WeightMode::Nonnegative)]
    pub mode: WeightMode,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Comma-separated graph sizes.
    #[arg(long, value_delimiter = ',', default_value = "64,128,256")]
    pub n: Vec<usize>,
    /// Expected out-degree: each size `n` uses edge probability
    /// `degree / n`, so shortest paths lengthen as `n` grows.
    #[arg(long, default_value_t = 2.0)]
    pub degree: f64,
    /// Fixed edge probability, overriding `--degree`.
    #[arg(long)]
    pub prob: Option<f64>,
    #[arg(long = "M", default_value_t = 1)]
    pub m: i64,
    #[arg(long, value_enum, default_value_t = WeightMode::Nonnegative)]
    pub mode: WeightMode,
    /// Instances per size; instance `i` uses graph seed `graph_seed + i`.
    #[arg(long, default_value_t = 32)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub graph_seed: u64,
    #[command(flatten)]
    pub algo: AlgoArgs,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: FormatError },
    #[error("{0}")]
    Algorithm(#[from] RpError),
    #[error("{0}")]
    Generate(#[from] GenError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => exit::IO,
            CliError::Parse { .. } => exit::PARSE,
            CliError::Algorithm(_) | CliError::Generate(_) => exit::ALGORITHM,
        }
    }
}

/// Runs a parsed command, writing human-readable output to `out`, and
/// returns the exit code.
pub fn run(cli: &Cli, out: &mut impl Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Solve(args) => solve(args, out, false),
        Command::Verify(args) => solve(args, out, true),
        Command::Gen(args) => gen(args, out),
        Command::Bench(args) => bench(args, out),
    }
}

fn io_err(path: &FsPath) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.to_path_buf(), source }
}

fn stdout_err(source: std::io::Error) -> CliError {
    CliError::Io { path: PathBuf::from("<stdout>"), source }
}

pub fn read_instance(path: &FsPath) -> Result<Instance, CliError> {
    let text = std::fs::read_to_string(path).map_err(io_err(path))?;
    parse_graph(&text).map_err(|source| CliError::Parse { path: path.to_path_buf(), source })
}

fn settings(args: &AlgoArgs, with_paths: bool, inject_fault: bool) -> Settings {
    Settings {
        seed: args.seed,
        epsilon: args.epsilon,
        c: args.c,
        z: args.z,
        bucket_size: args.bucket_size,
        with_paths,
        inject_fault,
    }
}

fn algo_report(o: &Outcome, no_timings: bool) -> AlgoReport {
    AlgoReport {
        replacements: o.result.dist.clone(),
        candidates: o.candidates,
        millis: if no_timings { 0.0 } else { o.millis },
        params: o.params.clone(),
    }
}

fn solve(args: &RunArgs, out: &mut impl Write, verify: bool) -> Result<i32, CliError> {
    let inst = read_instance(&args.input)?;
    let settings = settings(&args.algo, args.paths, args.inject_fault);
    let mut algos = args.algo.algo.expand();
    if (verify || args.paths) && !algos.contains(&Algo::Oracle) {
        algos.insert(0, Algo::Oracle);
    }
    let outcomes: Vec<Outcome> =
        algos.iter().map(|&a| run_one(a, &inst, &settings)).collect::<Result<_, _>>()?;

    let path = &outcomes[0].path;
    let nodes = path.nodes();
    writeln!(out, "path: {} (length {})", join(nodes), path.total_length()).map_err(stdout_err)?;

    let mut disagreements = 0;
    let oracle = outcomes.iter().find(|o| o.algo == Algo::Oracle);
    for o in &outcomes {
        let detail = if o.algo == Algo::Oracle { String::new() } else { format!(", {} candidates", o.candidates) };
        let millis = if args.algo.no_timings { 0.0 } else { o.millis };
        writeln!(out, "{}: {millis:.3} ms{detail}", o.algo).map_err(stdout_err)?;
        match oracle {
            Some(base) if verify && o.algo != Algo::Oracle => {
                let bad = diff(&base.result.dist, &o.result.dist);
                if bad.is_empty() {
                    writeln!(out, "  agrees with oracle").map_err(stdout_err)?;
                } else {
                    disagreements += 1;
                    writeln!(out, "  DISAGREES with oracle on {} edge(s)", bad.len()).map_err(stdout_err)?;
                    for (i, want, got) in bad {
                        writeln!(out, "    edge {} ({} -> {}): oracle {want}, got {got}", i + 1, nodes[i], nodes[i + 1])
                            .map_err(stdout_err)?;
                    }
                    writeln!(
                        out,
                        "    reproduce: rpaths verify --input {} --algo {} --seed {}",
                        args.input.display(),
                        o.algo,
                        settings.seed
                    )
                    .map_err(stdout_err)?;
                }
            }
            _ => {
                for (i, d) in o.result.dist.iter().enumerate() {
                    writeln!(out, "  edge {} ({} -> {}): {d}", i + 1, nodes[i], nodes[i + 1]).map_err(stdout_err)?;
                }
            }
        }
        if let Some(w) = &o.witnesses {
            for (i, walk) in w.iter().enumerate() {
                let text = walk.as_deref().map_or_else(|| "none".to_string(), join);
                writeln!(out, "  witness {}: {text}", i + 1).map_err(stdout_err)?;
            }
        }
    }

    if let Some(json_path) = &args.algo.json {
        let report = Report {
            n: inst.graph.n(),
            s: inst.s,
            t: inst.t,
            weight_bound: inst.graph.weight_bound(),
            path: nodes.to_vec(),
            path_length: path.total_length(),
            algorithms: outcomes
                .iter()
                .map(|o| (o.algo.name().to_string(), algo_report(o, args.algo.no_timings)))
                .collect(),
            agree: all_agree(outcomes.iter().map(|o| o.result.as_slice())),
            witnesses: oracle.and_then(|o| o.witnesses.clone()),
        };
        std::fs::write(json_path, report.to_json()).map_err(io_err(json_path))?;
    }
    Ok(if disagreements > 0 { exit::DISAGREEMENT } else { exit::OK })
}

fn gen(args: &GenArgs, out: &mut impl Write) -> Result<i32, CliError> {
    let inst = generate_graph(args.n, args.prob, args.m, args.mode, args.seed)?;
    let mut text = format!(
        "# generated: n={} prob={} M={} mode={} seed={}\n",
        args.n, args.prob, args.m, args.mode, args.seed
    );
    text.push_str(&write_graph(&inst));
    match &args.out {
        Some(path) => std::fs::write(path, text).map_err(io_err(path))?,
        None => out.write_all(text.as_bytes()).map_err(stdout_err)?,
    }
    Ok(exit::OK)
}

/// One line of `bench` output: statistics over the trials of one size.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub algo: String,
    pub trials: u64,
    pub path_edges_mean: f64,
    pub candidates_mean: f64,
    pub candidates_max: usize,
    pub levels_max: usize,
    pub millis_mean: f64,
    /// Every trial matched the oracle.
    pub agree: bool,
}

pub const BENCH_HEADER: &str =
    "n\talgo\ttrials\tpath_edges_mean\tcandidates_mean\tcandidates_max\tlevels_max\tmillis_mean\tagree";

fn bench(args: &BenchArgs, out: &mut impl Write) -> Result<i32, CliError> {
    let settings = settings(&args.algo, false, false);
    let algos = args.algo.algo.expand();
    let trials = args.trials.max(1);
    let mut rows = Vec::new();
    writeln!(out, "{BENCH_HEADER}").map_err(stdout_err)?;
    for &n in &args.n {
        let prob = args.prob.unwrap_or((args.degree / n as f64).min(1.0));
        let mut per_algo: Vec<Vec<Outcome>> = vec![Vec::new(); algos.len()];
        let mut agree = vec![true; algos.len()];
        for trial in 0..trials {
            let inst = generate_graph(n, prob, args.m, args.mode, args.graph_seed.wrapping_add(trial))?;
            let oracle = run_one(Algo::Oracle, &inst, &settings)?;
            for (slot, &a) in algos.iter().enumerate() {
                let o = if a == Algo::Oracle { oracle.clone() } else { run_one(a, &inst, &settings)? };
                agree[slot] &= o.result == oracle.result;
                per_algo[slot].push(o);
            }
        }
        for (slot, runs) in per_algo.iter().enumerate() {
            let mean = |f: &dyn Fn(&Outcome) -> f64| runs.iter().map(f).sum::<f64>() / trials as f64;
            let row = BenchRow {
                n,
                algo: algos[slot].name().to_string(),
                trials,
                path_edges_mean: mean(&|o| (o.path.len() - 1) as f64),
                candidates_mean: mean(&|o| o.candidates as f64),
                candidates_max: runs.iter().map(|o| o.candidates).max().unwrap_or(0),
                levels_max: runs.iter().map(|o| o.level_counts.len()).max().unwrap_or(0),
                millis_mean: if args.algo.no_timings { 0.0 } else { mean(&|o| o.millis) },
                agree: agree[slot],
            };
            writeln!(
                out,
                "{}\t{}\t{}\t{:.2}\t{:.2}\t{}\t{}\t{:.3}\t{}",
                row.n,
                row.algo,
                row.trials,
                row.path_edges_mean,
                row.candidates_mean,
                row.candidates_max,
                row.levels_max,
                row.millis_mean,
                row.agree
            )
            .map_err(stdout_err)?;
            rows.push(row);
        }
    }
    if let Some(json_path) = &args.algo.json {
        let doc = json!({
            "degree": args.degree,
            "prob": args.prob,
            "M": args.m,
            "mode": args.mode.to_string(),
            "graph_seed": args.graph_seed,
            "rows": rows,
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("rows serialize");
        text.push('\n');
        std::fs::write(json_path, text).map_err(io_err(json_path))?;
    }
    Ok(if rows.iter().all(|r| r.agree) { exit::OK } else { exit::DISAGREEMENT })
}

fn join(ids: &[usize]) -> String {
    ids.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

