//! `clique-randic`: compute generalized Randić indices, verify the clique
//! handshaking identities on a graph, and run exhaustive small-graph scans.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 unreadable input,
//! 64 bad usage.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use clique_randic::randic::{squared_handshake, unweighted_handshake};
use clique_randic::{
    bound_report, clique_handshake_identity, incidence_matrix_check, parse, reciprocal_identity,
    scan_with_jobs, BigRational, BoundReport, CliqueTable, Graph, GraphFormat, IdentityReport,
    ScanReport, WeightFunction,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

const EXIT_FAILURE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_USAGE: u8 = 64;

/// Numerators and denominators of random weights are drawn from 1..=1000.
const WEIGHT_RANGE: u32 = 1000;

#[derive(Parser)]
#[command(
    name = "clique-randic",
    version,
    about = "Generalized Randić indices and clique handshaking identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute R(G; k), clique counts and the upper bound c_k / (k + 1).
    Compute(ComputeArgs),
    /// Check the handshaking, reciprocal and incidence-matrix identities exactly.
    Verify(VerifyArgs),
    /// Check identities and bounds on every labelled graph of the given orders.
    Scan(ScanArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Graph file; stdin when omitted or '-'.
    input: Option<PathBuf>,
    /// Input format; guessed from the extension otherwise (.g6, .col/.dimacs).
    #[arg(long, value_parser = parse_format)]
    format: Option<GraphFormat>,
    /// Clique order k >= 1.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    /// Machine-readable JSON output.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Number of random rational weight functions to test.
    #[arg(long, default_value_t = 20)]
    trials: usize,
    /// Seed for the random weights.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct ScanArgs {
    /// Largest graph order (at most 7).
    #[arg(long)]
    n_max: usize,
    /// Smallest graph order; defaults to --n-max.
    #[arg(long)]
    n_min: Option<usize>,
    /// Largest clique order.
    #[arg(long)]
    k_max: usize,
    /// Write the full JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
    /// Print the full JSON report on stdout.
    #[arg(long)]
    json: bool,
}

fn parse_format(s: &str) -> Result<GraphFormat, String> {
    s.parse()
}

enum Failure {
    Input(String),
    Usage(String),
    Verification(String),
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Compute(args) => compute(&args),
        Command::Verify(args) => verify(&args),
        Command::Scan(args) => scan(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}

fn read_graph(args: &InputArgs) -> Result<Graph, Failure> {
    let stdin = args.input.as_deref().is_none_or(|p| p == Path::new("-"));
    let (text, format) = if stdin {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Input(format!("reading stdin: {e}")))?;
        (text, args.format.unwrap_or(GraphFormat::EdgeList))
    } else {
        let path = args.input.as_deref().expect("checked above");
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        let ext = path.extension().and_then(|e| e.to_str());
        (
            text,
            args.format
                .unwrap_or_else(|| GraphFormat::from_extension(ext)),
        )
    };
    parse(format, &text).map_err(|e| Failure::Input(format!("{} input, {e}", format.name())))
}

fn emit(text: &str) {
    let mut out = io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct ComputeOutput<'a> {
    command: &'static str,
    n: usize,
    m: usize,
    #[serde(flatten)]
    report: &'a BoundReport,
}

fn compute(args: &ComputeArgs) -> Result<(), Failure> {
    let g = read_graph(&args.input)?;
    let k = args.input.k as usize;
    let rep = bound_report(&g, k).map_err(|e| Failure::Usage(e.to_string()))?;
    if args.input.json {
        emit(&to_json(&ComputeOutput {
            command: "compute",
            n: g.n(),
            m: g.m(),
            report: &rep,
        }));
        return Ok(());
    }
    let mut rows = vec![
        ("order n", g.n().to_string()),
        ("size m", g.m().to_string()),
        ("k", k.to_string()),
        ("index R(G;k)", format!("{:.12}", rep.index_value)),
        ("c_k", rep.clique_count.to_string()),
        ("c_k,0 (isolated)", rep.isolated_count.to_string()),
        ("c_k+1", rep.upper_clique_count.to_string()),
        ("bound c_k/(k+1)", format!("{:.12}", rep.bound_value)),
        ("slack", format!("{:.12}", rep.slack)),
        ("equality (numeric)", rep.equality_numeric.to_string()),
        ("equality (structural)", rep.equality_structural.to_string()),
        (
            "component regular",
            rep.per_component_regular
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        ),
    ];
    if let Some(lower) = &rep.lower {
        rows.push((
            "lower bound sqrt(n-1)",
            format!("{:.12}", lower.bound_value),
        ));
        rows.push(("lower equality", lower.equality_numeric.to_string()));
        rows.push(("star", lower.is_star.to_string()));
    }
    emit(&table(&rows));
    Ok(())
}

fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

#[derive(Serialize)]
struct LabelledIdentity {
    label: String,
    #[serde(flatten)]
    report: IdentityReport,
}

#[derive(Serialize)]
struct VerifyOutput {
    command: &'static str,
    k: usize,
    trials: usize,
    seed: u64,
    all_hold: bool,
    identities: Vec<LabelledIdentity>,
}

fn verify(args: &VerifyArgs) -> Result<(), Failure> {
    let g = read_graph(&args.input)?;
    let k = args.input.k as usize;
    let usage = |e: clique_randic::AnalysisError| Failure::Usage(e.to_string());
    let table = CliqueTable::new(&g, k).map_err(|e| Failure::Usage(e.to_string()))?;
    let unit = WeightFunction::constant(&g, k, BigRational::from_integer(1.into()));
    let mut identities = vec![
        (
            "unit".to_string(),
            clique_handshake_identity(&g, &unit, k).map_err(usage)?,
        ),
        ("unit_counts".to_string(), unweighted_handshake(&table)),
        ("squared".to_string(), squared_handshake(&table)),
        (
            "squared_weighted".to_string(),
            clique_handshake_identity(&g, &WeightFunction::clique_values(&g, k), k)
                .map_err(usage)?,
        ),
        (
            "reciprocal".to_string(),
            reciprocal_identity(&g, k).map_err(usage)?,
        ),
        (
            "matrix_unit".to_string(),
            incidence_matrix_check(&g, &unit, k).map_err(usage)?,
        ),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    for t in 0..args.trials {
        let h = WeightFunction::random(&g, k, WEIGHT_RANGE, &mut rng);
        identities.push((
            format!("random[{t}]"),
            clique_handshake_identity(&g, &h, k).map_err(usage)?,
        ));
        identities.push((
            format!("matrix_random[{t}]"),
            incidence_matrix_check(&g, &h, k).map_err(usage)?,
        ));
    }
    let first_failure = identities.iter().find(|(_, r)| !r.holds).map(|(label, r)| {
        format!(
            "{label} ({}, k={}): lhs {} != rhs {}",
            r.kind, r.k, r.lhs, r.rhs
        )
    });
    let all_hold = first_failure.is_none();

    if args.input.json {
        emit(&to_json(&VerifyOutput {
            command: "verify",
            k,
            trials: args.trials,
            seed: args.seed,
            all_hold,
            identities: identities
                .into_iter()
                .map(|(label, report)| LabelledIdentity { label, report })
                .collect(),
        }));
    } else {
        let width = identities.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let mut text = String::new();
        for (label, r) in &identities {
            let verdict = if r.holds { "holds" } else { "FAILS" };
            text.push_str(&format!(
                "{label:<width$}  {:<17}  k={}  lhs={}  rhs={}  {verdict}\n",
                r.kind.to_string(),
                r.k,
                r.lhs,
                r.rhs
            ));
        }
        emit(&text);
    }
    match first_failure {
        None => Ok(()),
        Some(msg) => Err(Failure::Verification(msg)),
    }
}

fn scan(args: &ScanArgs) -> Result<(), Failure> {
    let n_min = args.n_min.unwrap_or(args.n_max);
    if n_min > args.n_max {
        return Err(Failure::Usage(format!(
            "--n-min {n_min} exceeds --n-max {}",
            args.n_max
        )));
    }
    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let report = scan_with_jobs(n_min..=args.n_max, args.k_max, jobs)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    if let Some(path) = &args.out {
        fs::write(path, report.to_json() + "\n")
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    if args.json {
        emit(&(report.to_json() + "\n"));
    } else {
        emit(&scan_summary(&report));
    }
    if report.is_clean() {
        return Ok(());
    }
    let mut offenders: Vec<String> = report
        .identity_failures
        .iter()
        .map(|f| format!("{} k={} {}: {} != {}", f.graph6, f.k, f.kind, f.lhs, f.rhs))
        .collect();
    offenders.extend(report.bound_violations.iter().map(|v| {
        format!(
            "{} k={} {:?} bound: index {} bound {}",
            v.graph6, v.k, v.side, v.index, v.bound
        )
    }));
    Err(Failure::Verification(offenders.join("\n")))
}

fn scan_summary(report: &ScanReport) -> String {
    let rows = [
        (
            "orders",
            format!("{}..={}", report.n_range[0], report.n_range[1]),
        ),
        (
            "clique orders",
            format!("{}..={}", report.k_range[0], report.k_range[1]),
        ),
        ("graphs scanned", report.graphs_scanned.to_string()),
        (
            "identity failures",
            report.identity_failures.len().to_string(),
        ),
        (
            "bound violations",
            report.bound_violations.len().to_string(),
        ),
        ("equality cases", report.equality_cases.len().to_string()),
        (
            "mismatches",
            report.characterization_mismatches.len().to_string(),
        ),
    ];
    let mut text = table(&rows);
    text.push_str(
        "\n k  with-cliques  vacuous  eq-numeric  eq-structural  mismatches  min-slack\n",
    );
    for s in &report.per_order {
        text.push_str(&format!(
            "{:>2}  {:>12}  {:>7}  {:>10}  {:>13}  {:>10}  {}\n",
            s.k,
            s.graphs_with_cliques,
            s.vacuous_equalities,
            s.equality_numeric,
            s.equality_structural,
            s.mismatches,
            s.min_slack.map_or("-".to_string(), |v| format!("{v:.3e}")),
        ));
    }
    text
}
