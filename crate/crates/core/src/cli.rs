//! Command-line front end.
//!
//! Indices printed or written by commands are 1-based, matching the file
//! formats; everything inside the library is 0-based. Conversion happens
//! only in this module.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::identify::is_identifiable;
use crate::io::{parse_graph, parse_mcq, write_graph, write_labels, write_mcq};
use crate::oracle::{self, DEFAULT_GUARD};
use crate::reductions::{self, ReductionOutput};
use crate::solver::{max_identifiable_subgraph, Outcome, SolveTrace};

/// Environment variable overriding the default enumeration guard.
pub const GUARD_ENV: &str = "IDSUB_GUARD";

#[derive(Debug, Parser)]
#[command(name = "idsub", version, about = "Identifiable ℓ-subgraphs of bipartite graphs")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Test whether a graph is identifiable (exit 0 = yes, 1 = no)
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Find the maximum identifiable ℓ-subgraph (exit 0 = found, 1 = none)
    Maxids {
        file: PathBuf,
        /// Print every deletion round
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exactly solve Min-Identifiable Subgraph for |J| <= k by enumeration
    Minids {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        /// Largest |L| to enumerate [default: $IDSUB_GUARD or 20]
        #[arg(long)]
        guard: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// List every J whose ℓ-subgraph is identifiable
    Enumerate {
        file: PathBuf,
        /// Largest |L| to enumerate [default: $IDSUB_GUARD or 20]
        #[arg(long)]
        guard: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Generate graphs
    #[command(subcommand)]
    Gen(GenCommand),
    /// Time the maximum-subgraph solver over random graphs, one CSV row per run
    Bench(BenchArgs),
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// Random bipartite graph, each pair kept independently with probability p
    Random {
        #[arg(long)]
        nl: usize,
        #[arg(long)]
        nr: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path, '-' for standard output
        #[arg(long)]
        out: Option<String>,
    },
    /// Reduction from a Multicolored Clique instance with k' = 2k
    McqK(ReductionArgs),
    /// Reduction from a Multicolored Clique instance with k' = |L| - k
    McqNlk(ReductionArgs),
    /// Random colored graph in the Multicolored Clique format
    McqRandom {
        /// Color class sizes, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Debug, Args)]
struct ReductionArgs {
    file: PathBuf,
    /// Output path for the graph, '-' for standard output
    #[arg(long)]
    out: Option<String>,
    /// Output path for the vertex label sidecar, '-' for standard output
    #[arg(long)]
    labels: Option<String>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long)]
    nl: usize,
    #[arg(long)]
    nr: usize,
    /// Edge probabilities, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    p_sweep: Vec<f64>,
    /// Seeds, comma separated; 'a..b' expands to a half-open range
    #[arg(long, default_value = "0")]
    seeds: String,
    /// Write CSV here instead of standard output
    #[arg(long)]
    csv: Option<String>,
}

#[derive(Debug, Serialize)]
struct RunRecord<T: Serialize> {
    command: CommandInfo,
    input_digest: String,
    outcome: T,
    wall_time_ms: f64,
}

#[derive(Debug, Serialize)]
struct CommandInfo {
    name: &'static str,
    args: BTreeMap<&'static str, Value>,
}

/// Parses `args` (including the program name) and runs the command, writing
/// to `out` and `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Check { file, json } => cmd_check(&file, json, out, err),
        Command::Maxids { file, trace, json } => cmd_maxids(&file, trace, json, out, err),
        Command::Minids { file, k, guard, json } => cmd_minids(&file, k, resolve_guard(guard)?, json, out, err),
        Command::Enumerate { file, guard, json } => cmd_enumerate(&file, resolve_guard(guard)?, json, out, err),
        Command::Gen(gen) => cmd_gen(gen, out, err),
        Command::Bench(args) => cmd_bench(&args, out),
    }
}

fn resolve_guard(flag: Option<usize>) -> Result<usize> {
    if let Some(g) = flag {
        return Ok(g);
    }
    match std::env::var(GUARD_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("{GUARD_ENV}='{v}' is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_GUARD),
    }
}

struct Input {
    graph: BipartiteGraph,
    digest: String,
}

fn read_bytes(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

fn load_graph(path: &Path, err: &mut dyn Write) -> Result<Input> {
    let bytes = read_bytes(path)?;
    let text = String::from_utf8_lossy(&bytes);
    let parsed = parse_graph(&text).map_err(|e| match e {
        Error::Parse { line, message } => Error::Input(format!("{}:{line}: {message}", path.display())),
        other => other,
    })?;
    for w in &parsed.warnings {
        writeln!(err, "warning: {w}")?;
    }
    Ok(Input {
        graph: parsed.graph,
        digest: digest(&bytes),
    })
}

fn one_based(xs: &[usize]) -> Vec<usize> {
    xs.iter().map(|&x| x + 1).collect()
}

/// `{1, 2, 3}` in 1-based indices.
fn fmt_set(xs: &[usize]) -> String {
    let inner: Vec<String> = xs.iter().map(|x| (x + 1).to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn emit_json<T: Serialize>(out: &mut dyn Write, record: &RunRecord<T>) -> Result<()> {
    let text = serde_json::to_string_pretty(record).map_err(|e| Error::Input(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn file_arg(path: &Path) -> Value {
    json!(path.display().to_string())
}

fn cmd_check(path: &Path, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let input = load_graph(path, err)?;
    let start = Instant::now();
    let report = is_identifiable(&input.graph);
    let wall = elapsed_ms(start);
    if json {
        let record = RunRecord {
            command: CommandInfo {
                name: "check",
                args: BTreeMap::from([("file", file_arg(path))]),
            },
            input_digest: input.digest,
            outcome: json!({
                "identifiable": report.identifiable,
                "failing_vertex": report.failing_vertex.map(|v| v + 1),
                "edgeless": report.edgeless,
                "n_left": input.graph.n_left(),
                "n_right": input.graph.n_right(),
                "edges": input.graph.edge_count(),
            }),
            wall_time_ms: wall,
        };
        emit_json(out, &record)?;
    } else if report.identifiable {
        writeln!(out, "identifiable")?;
    } else if let Some(v) = report.failing_vertex {
        writeln!(out, "not identifiable, witness vertex {}", v + 1)?;
    } else {
        writeln!(out, "not identifiable, no edges")?;
    }
    Ok(if report.identifiable { 0 } else { 1 })
}

fn trace_json(trace: &SolveTrace) -> Value {
    let iterations: Vec<Value> = trace
        .iterations
        .iter()
        .map(|it| {
            json!({
                "remaining_left": it.remaining_left,
                "pivot": it.pivot + 1,
                "blocker": one_based(&it.blocker),
                "deleted_right": one_based(&it.deleted_right),
            })
        })
        .collect();
    json!({
        "outcome": trace.outcome,
        "result": trace.result.as_deref().map(one_based),
        "iterations": iterations,
        "matchings_run": trace.matchings_run,
    })
}

fn cmd_maxids(path: &Path, trace: bool, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let input = load_graph(path, err)?;
    let start = Instant::now();
    let solved = max_identifiable_subgraph(&input.graph);
    let wall = elapsed_ms(start);
    if json {
        let record = RunRecord {
            command: CommandInfo {
                name: "maxids",
                args: BTreeMap::from([("file", file_arg(path)), ("trace", json!(trace))]),
            },
            input_digest: input.digest,
            outcome: trace_json(&solved),
            wall_time_ms: wall,
        };
        emit_json(out, &record)?;
    } else {
        if trace {
            for (i, it) in solved.iterations.iter().enumerate() {
                writeln!(
                    out,
                    "iteration {}: pivot {}, K = {}, deleted R = {}",
                    i + 1,
                    it.pivot + 1,
                    fmt_set(&it.blocker),
                    fmt_set(&it.deleted_right)
                )?;
            }
        }
        match &solved.result {
            Some(j) => writeln!(out, "J = {}", fmt_set(j))?,
            None => writeln!(out, "none")?,
        }
    }
    Ok(if solved.outcome == Outcome::Found { 0 } else { 1 })
}

fn guard_check(graph: &BipartiteGraph, guard: usize) -> Result<()> {
    if graph.n_left() > guard.min(oracle::MAX_GUARD) {
        return Err(Error::Input(format!(
            "refusing to enumerate 2^{} subsets: |L| exceeds the guard {guard}; pass --guard {} or set {GUARD_ENV} to override",
            graph.n_left(),
            graph.n_left()
        )));
    }
    Ok(())
}

fn cmd_minids(path: &Path, k: usize, guard: usize, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let input = load_graph(path, err)?;
    guard_check(&input.graph, guard)?;
    let start = Instant::now();
    let found = oracle::solve_min_ids_exact(&input.graph, k, guard)?;
    let wall = elapsed_ms(start);
    if json {
        let record = RunRecord {
            command: CommandInfo {
                name: "minids",
                args: BTreeMap::from([("file", file_arg(path)), ("k", json!(k)), ("guard", json!(guard))]),
            },
            input_digest: input.digest,
            outcome: json!({ "result": found.as_deref().map(one_based) }),
            wall_time_ms: wall,
        };
        emit_json(out, &record)?;
    } else {
        match &found {
            Some(j) => writeln!(out, "J = {}", fmt_set(j))?,
            None => writeln!(out, "none")?,
        }
    }
    Ok(if found.is_some() { 0 } else { 1 })
}

fn cmd_enumerate(path: &Path, guard: usize, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let input = load_graph(path, err)?;
    guard_check(&input.graph, guard)?;
    let start = Instant::now();
    let res = oracle::enumerate_identifiable(&input.graph, guard)?;
    let wall = elapsed_ms(start);
    if json {
        let sets: Vec<Vec<usize>> = res.identifiable_sets.iter().map(|j| one_based(j)).collect();
        let record = RunRecord {
            command: CommandInfo {
                name: "enumerate",
                args: BTreeMap::from([("file", file_arg(path)), ("guard", json!(guard))]),
            },
            input_digest: input.digest,
            outcome: json!({
                "identifiable_sets": sets,
                "max_set": res.max_set.as_deref().map(one_based),
                "max_count": res.max_count,
                "min_size": res.min_size,
            }),
            wall_time_ms: wall,
        };
        emit_json(out, &record)?;
    } else {
        for j in &res.identifiable_sets {
            writeln!(out, "J = {}", fmt_set(j))?;
        }
        match &res.max_set {
            Some(j) => writeln!(out, "max = {} ({} of maximum size)", fmt_set(j), res.max_count)?,
            None => writeln!(out, "max = none")?,
        }
    }
    Ok(if res.max_set.is_some() { 0 } else { 1 })
}

/// Writes `text` to `dest` ('-' is standard output).
fn write_dest(dest: &str, text: &str, out: &mut dyn Write) -> Result<()> {
    if dest == "-" {
        out.write_all(text.as_bytes())?;
    } else {
        fs::write(dest, text).map_err(|e| Error::Input(format!("cannot write {dest}: {e}")))?;
    }
    Ok(())
}

fn cmd_gen(gen: GenCommand, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match gen {
        GenCommand::Random { nl, nr, p, seed, out: dest } => {
            let g = reductions::gen_random_bipartite(nl, nr, p, seed)?;
            let summary = format!("|L|={} |R|={} |E|={}", g.n_left(), g.n_right(), g.edge_count());
            finish_gen(&write_graph(&g), None, dest.as_deref(), None, &summary, out, err)
        }
        GenCommand::McqK(args) => {
            let inst = parse_mcq(&String::from_utf8_lossy(&read_bytes(&args.file)?))?;
            let red = reductions::mcq_to_minids_k(&inst)?;
            emit_reduction(&red, &args, out, err)
        }
        GenCommand::McqNlk(args) => {
            let inst = parse_mcq(&String::from_utf8_lossy(&read_bytes(&args.file)?))?;
            let red = reductions::mcq_to_minids_nl_minus_k(&inst)?;
            emit_reduction(&red, &args, out, err)
        }
        GenCommand::McqRandom { sizes, p, seed, out: dest } => {
            let inst = reductions::gen_random_mcq(&sizes, p, seed)?;
            let summary = format!("n={} m={} k={}", inst.n(), inst.edges().len(), inst.k());
            finish_gen(&write_mcq(&inst), None, dest.as_deref(), None, &summary, out, err)
        }
    }
}

fn emit_reduction(red: &ReductionOutput, args: &ReductionArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let g = &red.graph;
    let mut summary = format!(
        "|L|={} |R|={} |E|={} k'={}",
        g.n_left(),
        g.n_right(),
        g.edge_count(),
        red.k_prime
    );
    if red.dropped_edges > 0 {
        summary.push_str(&format!("\ndropped {} same-color edge(s)", red.dropped_edges));
    }
    let labels = write_labels(red);
    finish_gen(
        &write_graph(g),
        Some(&labels),
        args.out.as_deref(),
        args.labels.as_deref(),
        &summary,
        out,
        err,
    )
}

fn finish_gen(
    body: &str,
    labels: Option<&str>,
    dest: Option<&str>,
    label_dest: Option<&str>,
    summary: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    if let Some(dest) = dest {
        write_dest(dest, body, out)?;
    }
    if let (Some(labels), Some(dest)) = (labels, label_dest) {
        write_dest(dest, labels, out)?;
    }
    // keep standard output clean when it carries file contents
    let to_stdout = dest != Some("-") && label_dest != Some("-");
    if to_stdout {
        writeln!(out, "{summary}")?;
    } else {
        writeln!(err, "{summary}")?;
    }
    Ok(0)
}

fn parse_seeds(spec: &str) -> Result<Vec<u64>> {
    let mut seeds = Vec::new();
    for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let bad = || Error::Input(format!("bad seed specification '{tok}'"));
        if let Some((a, b)) = tok.split_once("..") {
            let a: u64 = a.parse().map_err(|_| bad())?;
            let b: u64 = b.parse().map_err(|_| bad())?;
            seeds.extend(a..b);
        } else {
            seeds.push(tok.parse().map_err(|_| bad())?);
        }
    }
    if seeds.is_empty() {
        return Err(Error::Input("no seeds given".into()));
    }
    Ok(seeds)
}

#[derive(Debug)]
struct BenchRow {
    p: f64,
    seed: u64,
    iterations: usize,
    matchings_run: u64,
    wall_ms: f64,
    outcome: Outcome,
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<i32> {
    if args.nl == 0 || args.nr == 0 {
        return Err(Error::Input("--nl and --nr must be at least 1".into()));
    }
    if let Some(p) = args.p_sweep.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(Error::Input(format!("edge probability {p} outside [0, 1]")));
    }
    let seeds = parse_seeds(&args.seeds)?;
    let jobs: Vec<(f64, u64)> = args
        .p_sweep
        .iter()
        .flat_map(|&p| seeds.iter().map(move |&s| (p, s)))
        .collect();
    let rows: Vec<BenchRow> = jobs
        .par_iter()
        .map(|&(p, seed)| {
            let g = reductions::gen_random_bipartite(args.nl, args.nr, p, seed).expect("validated probability");
            let start = Instant::now();
            let trace = max_identifiable_subgraph(&g);
            BenchRow {
                p,
                seed,
                iterations: trace.iterations.len(),
                matchings_run: trace.matchings_run,
                wall_ms: elapsed_ms(start),
                outcome: trace.outcome,
            }
        })
        .collect();
    let mut csv = String::from("nl,nr,p,seed,iterations,matchings_run,wall_ms,outcome\n");
    for row in &rows {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{:.3},{}\n",
            args.nl,
            args.nr,
            row.p,
            row.seed,
            row.iterations,
            row.matchings_run,
            row.wall_ms,
            match row.outcome {
                Outcome::Found => "found",
                Outcome::NoneExists => "none",
            }
        ));
    }
    match &args.csv {
        Some(dest) => write_dest(dest, &csv, out)?,
        None => out.write_all(csv.as_bytes())?,
    }
    Ok(0)
}
