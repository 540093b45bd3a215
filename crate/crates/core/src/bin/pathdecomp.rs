use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use pathdecomp::decomp::text::{parse_decomposition, write_decomposition};
use pathdecomp::decomp::{verify, VerifyReport};
use pathdecomp::graph::Graph;
use pathdecomp::harness::{
    check, default_base_solver, enumerate_up_to, floor_search, parse_graphs, scan, write_graph6,
    BatchReport, Format,
};
use pathdecomp::solver::{solve_with, SolveError, SolveOptions, SolveTrace, DEFAULT_BUDGET};

const EXIT_FAILURE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "pathdecomp", version, about = "Decompose graphs with max degree 5 into at most ⌈n/2⌉ paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose each input graph and print its paths.
    Solve {
        /// Input file, `-` or absent for stdin.
        input: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
        /// Print the reduction steps as comments.
        #[arg(long)]
        trace: bool,
    },
    /// Check a decomposition against a graph.
    Verify {
        graph: PathBuf,
        decomposition: PathBuf,
        #[arg(long, default_value = "auto")]
        format: Format,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Solve and verify every graph; check G_E on irreducible ones.
    Check(Batch),
    /// Try ⌊n/2⌋ paths on every graph and classify the failures.
    FloorSearch(Batch),
    /// Report the configuration found in each graph.
    Scan(Batch),
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value = "auto")]
    format: Format,
    /// Node budget for each exact base-case search.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Write a JSON report to this path.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct Batch {
    /// graph6 stream or edge list; without it, graphs are enumerated.
    input: Option<PathBuf>,
    /// Enumerate connected graphs with Δ ≤ 5 on up to this many vertices.
    #[arg(long, default_value_t = 7)]
    max_n: usize,
    /// Print one line per graph.
    #[arg(long)]
    records: bool,
    #[command(flatten)]
    common: Common,
}

fn read_input(path: Option<&Path>) -> io::Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn load_graphs(path: Option<&Path>, format: Format) -> Result<Vec<Graph>, String> {
    let text = read_input(path).map_err(|e| format!("cannot read input: {e}"))?;
    parse_graphs(&text, format).map_err(|e| e.to_string())
}

fn write_report<T: Serialize>(path: Option<&PathBuf>, value: &T) -> Result<(), String> {
    let Some(path) = path else { return Ok(()) };
    let json = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    fs::write(path, json + "\n").map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn input_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_INPUT)
}

#[derive(Serialize)]
struct SolveRecord {
    graph6: String,
    n: usize,
    m: usize,
    bound: usize,
    paths: Option<Vec<Vec<usize>>>,
    verify: Option<VerifyReport>,
    trace: Option<SolveTrace>,
    error: Option<String>,
}

fn exit_code_for(e: &SolveError) -> u8 {
    match e {
        SolveError::Disconnected | SolveError::MaxDegree(_) | SolveError::Edgeless => EXIT_INPUT,
        e if e.is_budget() => EXIT_BUDGET,
        _ => EXIT_FAILURE,
    }
}

fn print_trace(trace: &SolveTrace) {
    for s in &trace.steps {
        println!("# step depth={} n={} {}", s.depth, s.order, s.subcase.id());
    }
    for b in &trace.base_cases {
        println!("# base depth={} n={} {}", b.depth, b.order, serde_json::to_string(&b.kind).unwrap_or_default());
    }
}

fn cmd_solve(input: Option<PathBuf>, common: Common, trace: bool) -> ExitCode {
    let graphs = match load_graphs(input.as_deref(), common.format) {
        Ok(g) => g,
        Err(e) => return input_error(e),
    };
    let opts = SolveOptions { budget: common.budget };
    let mut records = Vec::new();
    let mut worst = 0u8;
    for (i, g) in graphs.iter().enumerate() {
        let g6 = write_graph6(g).unwrap_or_default();
        if graphs.len() > 1 {
            println!("# graph {i} {g6}");
        }
        let bound = g.order().div_ceil(2);
        let mut rec = SolveRecord {
            graph6: g6,
            n: g.order(),
            m: g.size(),
            bound,
            paths: None,
            verify: None,
            trace: None,
            error: None,
        };
        match solve_with(g, &opts) {
            Ok(r) => {
                if trace {
                    print_trace(&r.trace);
                }
                print!("{}", write_decomposition(&r.decomposition));
                println!(
                    "# n={} m={} paths={} bound={} good={}",
                    g.order(),
                    g.size(),
                    r.decomposition.len(),
                    bound,
                    r.report.good
                );
                rec.paths = Some(r.decomposition.normalized());
                rec.verify = Some(r.report);
                rec.trace = Some(r.trace);
            }
            Err(e) => {
                if let (true, SolveError::Reduction { trace: t, .. }) = (trace, &e) {
                    print_trace(t);
                }
                eprintln!("error: {e}");
                let code = exit_code_for(&e);
                worst = match (worst, code) {
                    (EXIT_FAILURE, _) | (_, EXIT_FAILURE) => EXIT_FAILURE,
                    (EXIT_BUDGET, _) | (_, EXIT_BUDGET) => EXIT_BUDGET,
                    (_, c) => c,
                };
                rec.error = Some(e.to_string());
            }
        }
        records.push(rec);
    }
    if let Err(e) = write_report(common.report.as_ref(), &records) {
        return input_error(e);
    }
    ExitCode::from(worst)
}

fn cmd_verify(graph: PathBuf, decomposition: PathBuf, format: Format, report: Option<PathBuf>) -> ExitCode {
    let g = match load_graphs(Some(&graph), format) {
        Ok(gs) if gs.len() == 1 => gs.into_iter().next().expect("one graph"),
        Ok(gs) => return input_error(format!("expected one graph, found {}", gs.len())),
        Err(e) => return input_error(e),
    };
    let d = match read_input(Some(&decomposition))
        .map_err(|e| e.to_string())
        .and_then(|t| parse_decomposition(&t).map_err(|e| e.to_string()))
    {
        Ok(d) => d,
        Err(e) => return input_error(e),
    };
    let r = verify(&g, &d);
    println!("{r}");
    if let Err(e) = write_report(report.as_ref(), &r) {
        return input_error(e);
    }
    if r.good {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE)
    }
}

enum BatchKind {
    Check,
    Floor,
    Scan,
}

fn cmd_batch(kind: BatchKind, b: Batch) -> ExitCode {
    let graphs = match &b.input {
        Some(p) => load_graphs(Some(p), b.common.format),
        None => enumerate_up_to(b.max_n, 5).map_err(|e| e.to_string()),
    };
    let graphs = match graphs {
        Ok(g) => g,
        Err(e) => return input_error(e),
    };
    let opts = SolveOptions {
        budget: b.common.budget,
    };
    let report: BatchReport = match kind {
        BatchKind::Check => check(&graphs, &opts),
        BatchKind::Floor => floor_search(&graphs, &default_base_solver(b.common.budget)),
        BatchKind::Scan => scan(&graphs),
    };
    print!("{}", report.render_text(b.records));
    if let Err(e) = write_report(b.common.report.as_ref(), &report) {
        return input_error(e);
    }
    match kind {
        // Floor-search findings are open-question candidates, not failures.
        BatchKind::Floor => ExitCode::SUCCESS,
        _ if report.findings.iter().any(|f| f.kind != pathdecomp::harness::FindingKind::BudgetExhausted) => {
            ExitCode::from(EXIT_FAILURE)
        }
        _ if report.has_budget_findings() => ExitCode::from(EXIT_BUDGET),
        _ => ExitCode::SUCCESS,
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Solve { input, common, trace } => cmd_solve(input, common, trace),
        Command::Verify {
            graph,
            decomposition,
            format,
            report,
        } => cmd_verify(graph, decomposition, format, report),
        Command::Check(b) => cmd_batch(BatchKind::Check, b),
        Command::FloorSearch(b) => cmd_batch(BatchKind::Floor, b),
        Command::Scan(b) => cmd_batch(BatchKind::Scan, b),
    }
}
