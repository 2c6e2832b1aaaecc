//! Command-line driver: construct, verify, search, table, graph-check, rsat.
//!
//! Exit status contract (stable): 0 = all checks pass / search completed;
//! 1 = certified failure or nonexistence; 2 = usage or domain error;
//! 3 = node budget exhausted.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cyclesat::construction::{self, ConstructionParams};
use cyclesat::error::Error;
use cyclesat::search::{self, LogEntry, LogOutcome, ResultLog, SearchOptions, SearchOutcome};
use cyclesat::verify::{self, VerificationReport};
use cyclesat::{CayleyGraph, Modulus, ResidueSet};

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "cyclesat",
    version,
    about = "Symmetric complete (l,1)-sum-free sets and C_{l+1}-saturated Cayley graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Build the explicit set for odd n (even n gets the bipartite graph)
    /// and certify it.
    Construct {
        #[arg(long)]
        ell: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Accept any odd n satisfying the weaker k-hypothesis.
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Run the full certificate suite on an explicit set.
    Verify {
        #[arg(long)]
        ell: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Comma-separated least residues.
        #[arg(long)]
        set: String,
        /// Additionally run the direct graph-level checker.
        #[arg(long)]
        graph: bool,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Compute psi_l(n) by exhaustive search.
    Search {
        #[arg(long)]
        ell: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long)]
        max_size: Option<u32>,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Compute psi_l(n) over a range, streaming one row per n.
    Table {
        #[arg(long)]
        ell: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        from: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        to: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        /// Result log path (defaults to ./psi-results.log).
        #[arg(long)]
        log: Option<PathBuf>,
        /// Reuse results already in the log.
        #[arg(long)]
        resume: bool,
    },
    /// Direct graph-level check: regular, C_{l+1}-free, C_{l+1}-saturated.
    GraphCheck {
        #[arg(long)]
        ell: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long)]
        set: String,
    },
    /// Edge count and rsat upper bounds for a certified witness.
    Rsat {
        #[arg(long)]
        ell: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Defaults to the construction's set for (ell, n).
        #[arg(long)]
        set: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Construct {
            ell,
            n,
            force,
            format,
        } => run_construct(ell, n, force, format),
        Command::Verify {
            ell,
            n,
            set,
            graph,
            format,
        } => run_verify(ell, n, &set, graph, format),
        Command::Search {
            ell,
            n,
            max_size,
            threads,
            budget,
        } => run_search(ell, n, max_size, threads, budget),
        Command::Table {
            ell,
            from,
            to,
            format,
            log,
            resume,
        } => run_table(ell, from, to, format, log, resume),
        Command::GraphCheck { ell, n, set } => run_graph_check(ell, n, &set),
        Command::Rsat { ell, n, set } => run_rsat(ell, n, set.as_deref()),
    };
    ExitCode::from(code)
}

fn domain_error(err: &Error) -> u8 {
    eprintln!("error: {err}");
    match err {
        Error::CertificateRequired => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

fn require_even_ell(ell: u32) -> Result<(), u8> {
    if ell % 2 == 1 {
        eprintln!("error: l must be even (l = {ell})");
        return Err(EXIT_USAGE);
    }
    Ok(())
}

fn parse_set(raw: &str, n: u32) -> Result<ResidueSet, u8> {
    let mut members = Vec::new();
    for piece in raw.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        match piece.parse::<u32>() {
            Ok(v) => members.push(v),
            Err(_) => {
                eprintln!("error: cannot parse residue {piece:?}");
                return Err(EXIT_USAGE);
            }
        }
    }
    ResidueSet::from_members(Modulus::new(n), members).map_err(|e| domain_error(&e))
}

fn print_report(title: &str, report: &VerificationReport, format: Format) {
    match format {
        Format::Structured => {
            println!("{report}");
        }
        Format::Human => {
            println!("{title}:");
            for c in &report.checks {
                let status = if c.passed { "pass" } else { "FAIL" };
                match &c.counterexample {
                    Some(cx) => println!("  {status}  {} ({cx})", c.name),
                    None => println!("  {status}  {}", c.name),
                }
            }
            println!(
                "  => {}",
                if report.overall() {
                    "all checks pass"
                } else {
                    "FAILED"
                }
            );
        }
    }
}

fn print_params(p: &ConstructionParams, format: Format) {
    match format {
        Format::Structured => println!(
            "params ell={} n={} r={} t={} gamma={} j={} k={} alpha={} m={}",
            p.ell, p.n, p.r, p.t, p.gamma, p.j, p.k, p.alpha, p.big_m
        ),
        Format::Human => println!(
            "parameters: l={} n={} r={} t={} gamma={} j={} k={} alpha={} M={}",
            p.ell, p.n, p.r, p.t, p.gamma, p.j, p.k, p.alpha, p.big_m
        ),
    }
}

fn print_set(s: &ResidueSet, format: Format) {
    match format {
        Format::Structured => println!("set n={} size={} members={}", s.modulus().n(), s.len(), s),
        Format::Human => println!("S ({} elements): {}", s.len(), s),
    }
}

/// Set-level certificate plus the saturation hypotheses, deduplicated.
fn certify_both(s: &ResidueSet, ell: u32) -> cyclesat::Result<VerificationReport> {
    let mut report = verify::certify_symmetric_complete_sumfree(s, ell)?;
    let prop = verify::certify_proposition(s, ell)?;
    for check in prop.checks {
        if report.check(check.name).is_none() {
            report.checks.push(check);
        }
    }
    Ok(report)
}

fn run_construct(ell: u32, n: u32, force: bool, format: Format) -> u8 {
    if let Err(code) = require_even_ell(ell) {
        return code;
    }
    if n % 2 == 0 {
        // even orders: the balanced complete bipartite graph
        let graph = match construction::balanced_bipartite_graph(n, ell) {
            Ok(g) => g,
            Err(e) => return domain_error(&e),
        };
        match format {
            Format::Structured => println!(
                "notice kind=bipartite n={} side={} degree={} edges={}",
                n,
                n / 2,
                graph.degree(),
                graph.edge_count()
            ),
            Format::Human => println!(
                "even n: emitting K_{{{side},{side}}} as Cay(Z_{n}, odd residues); degree {}, {} edges",
                graph.degree(),
                graph.edge_count(),
                side = n / 2
            ),
        }
        print_set(graph.connection(), format);
        let report = match certify_both(graph.connection(), ell) {
            Ok(r) => r,
            Err(e) => return domain_error(&e),
        };
        print_report("certificate", &report, format);
        return if report.overall() { EXIT_OK } else { EXIT_FAIL };
    }

    let params = if force {
        ConstructionParams::derive_forced(ell, n)
    } else {
        ConstructionParams::derive(ell, n)
    };
    let params = match params {
        Ok(p) => p,
        Err(e) => return domain_error(&e),
    };
    print_params(&params, format);
    let s = construction::build_full_set(&params);
    print_set(&s, format);
    let report = match certify_both(&s, ell) {
        Ok(r) => r,
        Err(e) => return domain_error(&e),
    };
    print_report("certificate", &report, format);
    // a failure here would contradict the existence theorem
    if report.overall() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn run_verify(ell: u32, n: u32, raw_set: &str, graph: bool, format: Format) -> u8 {
    if let Err(code) = require_even_ell(ell) {
        return code;
    }
    let s = match parse_set(raw_set, n) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let mut report = match certify_both(&s, ell) {
        Ok(r) => r,
        Err(e) => return domain_error(&e),
    };
    if graph {
        match CayleyGraph::new(s.clone()) {
            Ok(g) => match verify::certify_graph(&g, ell + 1) {
                Ok(r) => report.checks.extend(r.checks),
                Err(e) => return domain_error(&e),
            },
            Err(e) => {
                eprintln!("note: graph-level check skipped: {e}");
            }
        }
    }
    print_report("certificate", &report, format);
    if report.overall() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn run_search(
    ell: u32,
    n: u32,
    max_size: Option<u32>,
    threads: Option<usize>,
    budget: Option<u64>,
) -> u8 {
    if let Err(code) = require_even_ell(ell) {
        return code;
    }
    let opts = SearchOptions {
        max_size,
        threads,
        budget,
        ..SearchOptions::default()
    };
    let result = match search::psi_search(n, ell, &opts) {
        Ok(r) => r,
        Err(e) => return domain_error(&e),
    };
    println!("{}", LogEntry::from_result(&result).to_line_with(false));
    match result.outcome {
        SearchOutcome::Found { .. } => EXIT_OK,
        SearchOutcome::NoneExists { .. } => EXIT_FAIL,
        SearchOutcome::Inconclusive { .. } => EXIT_BUDGET,
    }
}

fn csv_row(r: &search::SearchResult) -> String {
    match &r.outcome {
        SearchOutcome::Found { psi, witness, .. } => {
            format!("{},{},\"{}\"", r.n, psi, witness)
        }
        SearchOutcome::NoneExists { .. } => format!("{},-,\"\"", r.n),
        SearchOutcome::Inconclusive { .. } => format!("{},?,\"\"", r.n),
    }
}

fn run_table(
    ell: u32,
    from: u32,
    to: u32,
    format: TableFormat,
    log: Option<PathBuf>,
    resume: bool,
) -> u8 {
    if let Err(code) = require_even_ell(ell) {
        return code;
    }
    if from > to {
        eprintln!("error: inverted range {from}..{to}");
        return EXIT_USAGE;
    }
    let log = ResultLog::new(log.unwrap_or_else(ResultLog::default_path));
    if format == TableFormat::Csv {
        println!("n,psi,witness");
    }
    let mut any_inconclusive = false;
    let outcome = search::psi_table(
        ell,
        from,
        to,
        &SearchOptions::default(),
        Some(&log),
        resume,
        |r| {
            match format {
                TableFormat::Csv => println!("{}", csv_row(r)),
                TableFormat::Structured => {
                    println!("{}", LogEntry::from_result(r).to_line_with(false))
                }
            }
            if matches!(r.outcome, SearchOutcome::Inconclusive { .. }) {
                any_inconclusive = true;
            }
        },
    );
    match outcome {
        Ok(_) => {
            if any_inconclusive {
                EXIT_BUDGET
            } else {
                EXIT_OK
            }
        }
        Err(e) => domain_error(&e),
    }
}

fn run_graph_check(ell: u32, n: u32, raw_set: &str) -> u8 {
    if let Err(code) = require_even_ell(ell) {
        return code;
    }
    let s = match parse_set(raw_set, n) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let g = match CayleyGraph::new(s) {
        Ok(g) => g,
        Err(e) => {
            // not a valid connection set: report as a failed check
            println!("check name=connection pass=false ({e})");
            println!("overall pass=false");
            return EXIT_FAIL;
        }
    };
    println!(
        "graph n={} degree={} edges={}",
        g.n(),
        g.degree(),
        g.edge_count()
    );
    let report = match verify::certify_graph(&g, ell + 1) {
        Ok(r) => r,
        Err(e) => return domain_error(&e),
    };
    println!("{report}");
    if report.overall() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn cached_psi(ell: u32, n: u32) -> Option<u32> {
    let log = ResultLog::new(ResultLog::default_path());
    let entries = log.load().ok()?;
    entries.iter().find_map(|e| match &e.outcome {
        LogOutcome::Found { psi, .. }
            if e.ell == ell && e.n == n && e.version == search::LOG_VERSION =>
        {
            Some(*psi)
        }
        _ => None,
    })
}

fn run_rsat(ell: u32, n: u32, raw_set: Option<&str>) -> u8 {
    if let Err(code) = require_even_ell(ell) {
        return code;
    }
    let s = match raw_set {
        Some(raw) => match parse_set(raw, n) {
            Ok(s) => s,
            Err(code) => return code,
        },
        None => match ConstructionParams::derive(ell, n) {
            Ok(p) => construction::build_full_set(&p),
            Err(e) => return domain_error(&e),
        },
    };
    let report = match search::rsat_report(&s, ell, cached_psi(ell, n)) {
        Ok(r) => r,
        Err(e) => return domain_error(&e),
    };
    println!(
        "rsat ell={} n={} degree={} edges={} bound_plus={:.3} satisfied={} bound_minus={:.3} satisfied_minus={}",
        report.ell,
        report.n,
        report.degree,
        report.edges,
        report.bound_plus(),
        report.bound_plus_satisfied,
        report.bound_minus(),
        report.bound_minus_satisfied
    );
    if let (Some(psi), Some(product)) = (report.cached_psi, report.product_bound()) {
        println!(
            "rsat_product ell={} n={} psi={} bound={}",
            ell, n, psi, product
        );
    }
    if report.bound_plus_satisfied {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}
