//! `esbss`: check, decompose and sparsify 2-edge strongly biconnected
//! digraphs given as edge lists.
//!
//! Exit codes: 0 success, 1 negative answer or infeasible input, 2 input
//! error, 3 budget exhausted.

mod report;

use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use esbss::connectivity::{blocks, sccs};
use esbss::graph::{to_dot_labeled, underlying};
use esbss::oracle::exact_m2esbss;
use esbss::sbc::{b_bridges, sbcs};
use esbss::testkit::{generate, GenSpec};
use esbss::{
    approx_m2esbss, bound_report, is_two_edge_strongly_biconnected, parse_edge_list, ApproxTrace,
    ArcId, ArcSet, Digraph, Error, Vertex,
};

use report::*;

#[derive(Parser)]
#[command(name = "esbss", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// Emit a JSON run report instead of text.
    #[arg(long)]
    json: bool,
    /// Added to vertex ids in text output (1 for 1-based labels).
    #[arg(long, default_value_t = 0)]
    label_offset: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether the graph is 2-edge strongly biconnected.
    Check {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Print SCCs, blocks, cut vertices and strongly biconnected components.
    Components {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// List the b-bridges of a strongly biconnected graph.
    Bbridges {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Find a small 2-edge strongly biconnected spanning subgraph.
    Minimize {
        file: PathBuf,
        /// Run the exhaustive solver instead of the approximation.
        #[arg(long)]
        exact: bool,
        /// Feasibility checks allowed to the exhaustive solver.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        /// Write the input as DOT with the chosen arcs highlighted.
        #[arg(long, value_name = "OUT")]
        dot: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Generate a seeded random instance (bidirected cycle plus extra arcs).
    Gen {
        n: usize,
        extra: usize,
        seed: u64,
        /// Output file; stdout when omitted.
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Recompute the size bounds for a stored trace or minimize report.
    Bound {
        trace: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Display) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::InvalidParameters(_) | Error::TooLarge { .. } => 2,
            Error::BudgetExceeded { .. } => 3,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

/// Like `From<Error>`, but renders an input witness with `offset`.
fn labeled(e: Error, offset: usize) -> Failure {
    match e {
        Error::NotTwoEdgeStronglyBiconnected(w) => Failure {
            code: 1,
            message: format!(
                "input is not 2-edge strongly biconnected ({})",
                w.describe(offset)
            ),
        },
        other => other.into(),
    }
}

struct Loaded {
    graph: Digraph,
    info: InputInfo,
}

fn load(path: &Path) -> Result<Loaded, Failure> {
    let bytes =
        std::fs::read(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let graph =
        parse_edge_list(&bytes).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let info = InputInfo {
        path: path.display().to_string(),
        n: graph.n(),
        m: graph.m(),
    };
    Ok(Loaded { graph, info })
}

fn emit_json<T: Serialize>(
    command: &str,
    input: Option<InputInfo>,
    result: T,
    started: Instant,
    seed: Option<u64>,
) {
    let report = RunReport {
        command: command.to_string(),
        input,
        result,
        timing_ms: started.elapsed().as_secs_f64() * 1e3,
        provenance: Provenance::new(seed),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn vertex_set(vs: &[Vertex], offset: usize) -> String {
    let labels: Vec<String> = vs.iter().map(|v| (v + offset).to_string()).collect();
    format!("{{{}}}", labels.join(","))
}

fn arc_text(g: &Digraph, id: ArcId, offset: usize) -> String {
    let a = g.arc(id);
    format!("{id} {}->{}", a.tail + offset, a.head + offset)
}

fn arcs_text(g: &Digraph, ids: &[ArcId], offset: usize) -> String {
    ids.iter()
        .map(|&a| arc_text(g, a, offset))
        .collect::<Vec<_>>()
        .join(", ")
}

fn check(file: &Path, common: &Common) -> CmdResult {
    let started = Instant::now();
    let Loaded { graph, info } = load(file)?;
    let report = is_two_edge_strongly_biconnected(&graph);
    let code = if report.two_edge_sbc { 0 } else { 1 };
    let witness_text = report
        .witness
        .as_ref()
        .map(|w| w.describe(common.label_offset));
    if common.json {
        emit_json(
            "check",
            Some(info),
            CheckResult {
                report,
                witness_text,
            },
            started,
            None,
        );
        return Ok(code);
    }
    println!("{}: n={} m={}", info.path, info.n, info.m);
    println!("strongly connected: {}", yes_no(report.strongly_connected));
    println!(
        "underlying biconnected: {}",
        yes_no(report.underlying_biconnected)
    );
    println!(
        "strongly biconnected: {}",
        yes_no(report.strongly_biconnected)
    );
    println!(
        "2-edge strongly biconnected: {}",
        yes_no(report.two_edge_sbc)
    );
    if let Some(text) = witness_text {
        println!("witness: {text}");
    }
    Ok(code)
}

fn components(file: &Path, common: &Common) -> CmdResult {
    let started = Instant::now();
    let Loaded { graph, info } = load(file)?;
    let dec = blocks(&underlying(&graph));
    let result = ComponentsResult {
        sccs: sccs(&graph).components,
        blocks: dec.blocks,
        cut_vertices: dec.cut_vertices,
        sbcs: sbcs(&graph).components().to_vec(),
    };
    if common.json {
        emit_json("components", Some(info), result, started, None);
        return Ok(0);
    }
    let off = common.label_offset;
    let list = |sets: &[Vec<Vertex>]| {
        sets.iter()
            .map(|s| vertex_set(s, off))
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("SCCs ({}): {}", result.sccs.len(), list(&result.sccs));
    println!("blocks ({}): {}", result.blocks.len(), list(&result.blocks));
    println!("cut vertices: {}", vertex_set(&result.cut_vertices, off));
    println!("SBCs ({}): {}", result.sbcs.len(), list(&result.sbcs));
    Ok(0)
}

fn bbridges(file: &Path, common: &Common) -> CmdResult {
    let started = Instant::now();
    let Loaded { graph, info } = load(file)?;
    let found = b_bridges(&graph)?;
    if common.json {
        let b_bridges = found
            .iter()
            .map(|&arc| {
                let a = graph.arc(arc);
                ArcInfo {
                    arc,
                    tail: a.tail,
                    head: a.head,
                }
            })
            .collect();
        emit_json(
            "bbridges",
            Some(info),
            BBridgesResult { b_bridges },
            started,
            None,
        );
        return Ok(0);
    }
    println!(
        "b-bridges ({}): {}",
        found.len(),
        arcs_text(&graph, &found, common.label_offset)
    );
    Ok(0)
}

fn print_trace(g: &Digraph, t: &ApproxTrace, offset: usize) {
    let report = bound_report(t);
    println!("minimal 2-edge-connected subgraph: {} arcs", t.u.len());
    if t.early_exit {
        println!("already 2-edge strongly biconnected; no augmentation");
    } else {
        println!(
            "phase 1 added {}: {}",
            t.phase1_added.len(),
            arcs_text(g, &t.phase1_added, offset)
        );
        println!("b-bridges found (i): {}", t.i());
        for r in &t.per_bridge_added {
            println!(
                "  without {}: added {}: {}",
                arc_text(g, r.bridge, offset),
                r.added.len(),
                arcs_text(g, &r.added, offset)
            );
        }
    }
    println!("size: {}", report.size);
    println!(
        "bound: {} ≤ i·{} + {} = {} (i = {})",
        report.size,
        t.n - 1,
        5 * t.n,
        report.upper_bound,
        t.i()
    );
    println!("lower bound: 2n = {}", report.lower_bound);
    println!("ratio bound: (5 + i)/2 = {}", report.ratio_upper);
}

fn minimize(
    file: &Path,
    exact: bool,
    budget: u64,
    dot: Option<&Path>,
    common: &Common,
) -> CmdResult {
    let started = Instant::now();
    let Loaded { graph, info } = load(file)?;
    let off = common.label_offset;

    let (result, chosen) = if exact {
        let r = match exact_m2esbss(&graph, budget) {
            Err(Error::BudgetExceeded {
                explored,
                best_known,
            }) => {
                return Err(Failure {
                    code: 3,
                    message: format!(
                        "budget exhausted after {explored} checks; best known: {best_known} arcs"
                    ),
                })
            }
            other => other.map_err(|e| labeled(e, off))?,
        };
        let chosen = r.witness.clone();
        (MinimizeResult::Exact(r), chosen)
    } else {
        let trace = approx_m2esbss(&graph).map_err(|e| labeled(e, off))?;
        let bound = bound_report(&trace);
        let chosen = trace.e2e.clone();
        (MinimizeResult::Approx { trace, bound }, chosen)
    };

    if let Some(out) = dot {
        let text = to_dot_labeled(
            &graph,
            &ArcSet::from_ids(graph.m(), chosen.iter().copied()),
            off,
        );
        std::fs::write(out, text).map_err(|e| Failure::input(format!("{}: {e}", out.display())))?;
    }

    if common.json {
        emit_json("minimize", Some(info), result, started, None);
        return Ok(0);
    }
    println!("{}: n={} m={}", info.path, info.n, info.m);
    match &result {
        MinimizeResult::Approx { trace, .. } => print_trace(&graph, trace, off),
        MinimizeResult::Exact(r) => {
            println!("optimal: {}", r.opt_size);
            println!("subsets explored: {}", r.explored);
            println!("smaller subsets ruled out: {}", r.certificate_checks);
            println!("arcs: {}", arcs_text(&graph, &r.witness, off));
        }
    }
    Ok(0)
}

fn gen(n: usize, extra: usize, seed: u64, out: Option<&Path>, json: bool) -> CmdResult {
    let started = Instant::now();
    let spec = GenSpec::new(n, extra, seed);
    let g = generate(spec)?;
    let text = g.to_edge_list();
    match out {
        Some(path) => std::fs::write(path, &text)
            .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?,
        None if !json => print!("{text}"),
        None => {}
    }
    if json {
        let result = GenResult {
            spec,
            m: g.m(),
            out: out.map(|p| p.display().to_string()),
        };
        emit_json("gen", None, result, started, Some(seed));
    } else if let Some(path) = out {
        println!("wrote n={} m={} to {}", g.n(), g.m(), path.display());
    }
    Ok(0)
}

/// Accepts a bare trace or a full `minimize --json` report.
fn read_trace(path: &Path) -> Result<ApproxTrace, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let inner = value.pointer("/result/trace").cloned().unwrap_or(value);
    serde_json::from_value(inner)
        .map_err(|e| Failure::input(format!("{}: not a trace: {e}", path.display())))
}

fn bound(path: &Path, json: bool) -> CmdResult {
    let started = Instant::now();
    let trace = read_trace(path)?;
    let report = bound_report(&trace);
    if json {
        let info = InputInfo {
            path: path.display().to_string(),
            n: trace.n,
            m: trace.m,
        };
        emit_json("bound", Some(info), &report, started, None);
    } else {
        println!("size: {}", report.size);
        println!("upper bound: i(n-1) + 5n = {}", report.upper_bound);
        println!("lower bound: 2n = {}", report.lower_bound);
        println!("ratio bound: (5 + i)/2 = {}", report.ratio_upper);
        println!("within bounds: {}", yes_no(report.sandwich_holds));
    }
    Ok(if report.sandwich_holds { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Check { file, common } => check(file, common),
        Command::Components { file, common } => components(file, common),
        Command::Bbridges { file, common } => bbridges(file, common),
        Command::Minimize {
            file,
            exact,
            budget,
            dot,
            common,
        } => minimize(file, *exact, *budget, dot.as_deref(), common),
        Command::Gen {
            n,
            extra,
            seed,
            out,
            json,
        } => gen(*n, *extra, *seed, out.as_deref(), *json),
        Command::Bound { trace, json } => bound(trace, *json),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
