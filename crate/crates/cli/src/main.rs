//! `me2c` command-line tool.
//!
//! Exit codes: 0 ok, 1 infeasible coloring (verify), 2 strategy or
//! generator precondition, 3 unreadable or malformed input, 4 internal
//! certification failure, 5 oracle budget exceeded, 64 usage, 74 output
//! write failure.

mod bench;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use me2c::coloring::{check_feasible, parse_coloring, serialize_coloring, solve_detailed, ColoringError};
use me2c::graph::{
    gen_cactus_chain, gen_clawfree_random, gen_complete, gen_cycle, gen_petersen, gen_pm_random,
    gen_subcubic_random, parse_graph, serialize_graph, Graph, GraphError,
};
use me2c::normalize::{normalize, NormalizeError, Strategy};
use me2c::oracle::{exact_opt, OracleError, DEFAULT_EDGE_BUDGET};

use report::RunReport;

#[derive(Debug)]
pub enum CliError {
    Infeasible(String),
    Precondition(String),
    Input(String),
    Certification(String),
    Budget(String),
    Usage(String),
    Output(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Infeasible(_) => 1,
            CliError::Precondition(_) => 2,
            CliError::Input(_) => 3,
            CliError::Certification(_) => 4,
            CliError::Budget(_) => 5,
            CliError::Usage(_) => 64,
            CliError::Output(_) => 74,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Infeasible(s)
            | CliError::Precondition(s)
            | CliError::Input(s)
            | CliError::Certification(s)
            | CliError::Budget(s)
            | CliError::Usage(s)
            | CliError::Output(s) => s,
        }
    }
}

impl From<NormalizeError> for CliError {
    fn from(e: NormalizeError) -> Self {
        match e {
            NormalizeError::NotSubcubic(_) | NormalizeError::NoPerfectMatching { .. } => {
                CliError::Precondition(e.to_string())
            }
            other => CliError::Certification(other.to_string()),
        }
    }
}

impl From<ColoringError> for CliError {
    fn from(e: ColoringError) -> Self {
        match e {
            ColoringError::Normalize(inner) => inner.into(),
            other => CliError::Certification(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(name = "me2c", version, about = "Maximum edge 2-coloring: solve, certify, benchmark")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalize, color, lift and certify a graph.
    Solve {
        graph: PathBuf,
        #[arg(long, default_value = "general")]
        strategy: Strategy,
        /// Coloring file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Run report file (default: stderr).
        #[arg(long)]
        report: Option<PathBuf>,
        /// Leave wall time out of the report.
        #[arg(long)]
        no_timing: bool,
    },
    /// Print the normalized graph.
    Normalize {
        graph: PathBuf,
        #[arg(long, default_value = "general")]
        strategy: Strategy,
        /// Rewrite trace file.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Normalized graph file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Optimal color count by exhaustive search.
    Exact {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EDGE_BUDGET)]
        budget: usize,
        /// Optimal coloring file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a coloring is feasible; exit 1 if not.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Generate an instance: cycle N, complete N, petersen, subcubic N,
    /// clawfree N, pm N P, chain K.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve every `*.g` file of a directory and write a CSV.
    Bench {
        dir: PathBuf,
        #[arg(long, default_value = "general")]
        strategy: Strategy,
        /// Run the exact oracle on instances with at most this many edges
        /// (0 disables it).
        #[arg(long, default_value_t = DEFAULT_EDGE_BUDGET)]
        oracle_budget: usize,
        /// CSV file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        no_timing: bool,
    },
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_to(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Output(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn instance_name(path: &Path) -> String {
    path.file_name()
        .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

/// Solves one graph and builds its report. A certification failure still
/// yields a report (flagged) alongside the error.
pub fn run_solve(
    name: &str,
    g: &Graph,
    strategy: Strategy,
    timing: bool,
) -> (Result<me2c::coloring::Solution, CliError>, Option<RunReport>) {
    let start = Instant::now();
    let result = solve_detailed(g, strategy);
    let ms = timing.then(|| start.elapsed().as_millis());
    match result {
        Ok(sol) => {
            let report = RunReport::from_certificate(name, g, &sol.certificate, &sol.stats, ms);
            (Ok(sol), Some(report))
        }
        Err(ColoringError::CertificationFailure { achieved, bound }) => {
            let stats = normalize(g, strategy).map(|r| r.2).unwrap_or_default();
            let report = RunReport::failed(name, g, strategy, achieved, bound, &stats, ms);
            let err = CliError::Certification(format!(
                "{name}: {achieved} colors exceed the bound {bound}"
            ));
            (Err(err), Some(report))
        }
        Err(e) => (Err(e.into()), None),
    }
}

fn cmd_solve(
    path: &Path,
    strategy: Strategy,
    out: Option<&Path>,
    report_path: Option<&Path>,
    timing: bool,
) -> Result<(), CliError> {
    let g = read_graph(path)?;
    let (result, report) = run_solve(&instance_name(path), &g, strategy, timing);
    if let Some(report) = report {
        match report_path {
            Some(p) => fs::write(p, report.to_text())
                .map_err(|e| CliError::Output(format!("{}: {e}", p.display())))?,
            None => eprint!("{}", report.to_text()),
        }
    }
    let sol = result?;
    check_feasible(&g, &sol.coloring).map_err(|e| CliError::Certification(e.to_string()))?;
    write_to(out, &serialize_coloring(&g, &sol.coloring))
}

fn cmd_normalize(
    path: &Path,
    strategy: Strategy,
    trace: Option<&Path>,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let g = read_graph(path)?;
    let (h, log, _) = normalize(&g, strategy)?;
    if let Some(p) = trace {
        fs::write(p, log.trace()).map_err(|e| CliError::Output(format!("{}: {e}", p.display())))?;
    }
    write_to(out, &serialize_graph(&h))
}

fn cmd_exact(path: &Path, budget: usize, out: Option<&Path>) -> Result<(), CliError> {
    let g = read_graph(path)?;
    let (chi, k) = exact_opt(&g, budget).map_err(|e| match e {
        OracleError::BudgetTooLarge(_) => CliError::Usage(e.to_string()),
        _ => CliError::Budget(e.to_string()),
    })?;
    if let Some(p) = out {
        fs::write(p, serialize_coloring(&g, &chi))
            .map_err(|e| CliError::Output(format!("{}: {e}", p.display())))?;
    }
    println!("{k}");
    Ok(())
}

fn cmd_verify(graph: &Path, coloring: &Path) -> Result<(), CliError> {
    let g = read_graph(graph)?;
    let text = fs::read_to_string(coloring)
        .map_err(|e| CliError::Input(format!("{}: {e}", coloring.display())))?;
    let chi = parse_coloring(&g, &text).map_err(|e| match e {
        ColoringError::Parse { .. } | ColoringError::NotTotal { .. } => {
            CliError::Input(format!("{}: {e}", coloring.display()))
        }
        other => CliError::Infeasible(other.to_string()),
    })?;
    check_feasible(&g, &chi).map_err(|e| CliError::Infeasible(e.to_string()))?;
    println!("feasible {}", chi.count());
    Ok(())
}

fn param<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> Result<T, CliError> {
    let raw = params
        .get(i)
        .ok_or_else(|| CliError::Usage(format!("missing parameter {what}")))?;
    raw.parse()
        .map_err(|_| CliError::Usage(format!("bad value for {what}: {raw:?}")))
}

fn generate(family: &str, params: &[String], seed: u64) -> Result<Graph, CliError> {
    let expected = match family {
        "petersen" => 0,
        "pm" => 2,
        "cycle" | "complete" | "subcubic" | "clawfree" | "chain" => 1,
        other => return Err(CliError::Usage(format!("unknown family {other:?}"))),
    };
    if params.len() != expected {
        return Err(CliError::Usage(format!(
            "{family} takes {expected} parameter(s), got {}",
            params.len()
        )));
    }
    let g: Result<Graph, GraphError> = match family {
        "cycle" => gen_cycle(param(params, 0, "n")?),
        "complete" => gen_complete(param(params, 0, "n")?),
        "petersen" => Ok(gen_petersen()),
        "subcubic" => gen_subcubic_random(param(params, 0, "n")?, seed),
        "clawfree" => gen_clawfree_random(param(params, 0, "n")?, seed),
        "pm" => gen_pm_random(param(params, 0, "n")?, param(params, 1, "p")?, seed),
        _ => gen_cactus_chain(param(params, 0, "k")?),
    };
    g.map_err(|e| CliError::Precondition(e.to_string()))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve { graph, strategy, out, report, no_timing } => {
            cmd_solve(&graph, strategy, out.as_deref(), report.as_deref(), !no_timing)
        }
        Command::Normalize { graph, strategy, trace, out } => {
            cmd_normalize(&graph, strategy, trace.as_deref(), out.as_deref())
        }
        Command::Exact { graph, budget, out } => cmd_exact(&graph, budget, out.as_deref()),
        Command::Verify { graph, coloring } => cmd_verify(&graph, &coloring),
        Command::Gen { family, params, seed, out } => {
            let g = generate(&family, &params, seed)?;
            write_to(out.as_deref(), &serialize_graph(&g))
        }
        Command::Bench { dir, strategy, oracle_budget, out, no_timing } => {
            let csv = bench::run(&dir, strategy, oracle_budget, !no_timing)?;
            write_to(out.as_deref(), &csv.text)?;
            match csv.violations {
                0 => Ok(()),
                k => Err(CliError::Certification(format!("{k} rows violate achieved <= opt <= bound"))),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { 64 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
