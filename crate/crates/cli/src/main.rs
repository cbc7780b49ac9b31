use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use artemis_cli::bench::{bench, BenchError, DEFAULT_DENSITY};
use artemis_cli::dimacs::{parse_dimacs, write_coloring, write_dimacs, ParsedGraph};
use artemis_cli::exit;
use artemis_cli::generate::{generate, Family, GenerateError};
use artemis_cli::report::RunReport;
use artemis_cli::trace::TraceFile;
use artemis_cli::verify::{color_and_verify, VerifyOutcome};
use artemis_core::engine::color_artemis_with;
use artemis_core::oracles::{
    find_antihole, find_odd_hole, find_prism, OracleBudget, StructureWitness,
};
use artemis_core::OracleError;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "artemis",
    version,
    about = "Optimal coloring of graphs with no odd hole, antihole or prism"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a DIMACS graph and print the coloring.
    Color {
        /// Check every step against the exhaustive oracles (small graphs).
        #[arg(long)]
        verify: bool,
        /// Write the contraction trace as JSON.
        #[arg(long, value_name = "PATH")]
        trace_json: Option<PathBuf>,
        file: PathBuf,
    },
    /// Search a DIMACS graph for an odd hole, an antihole and a prism.
    Detect { file: PathBuf },
    /// Print a random graph of a family in DIMACS form.
    Generate {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_DENSITY)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Tabulate operation counts over several sizes.
    Bench {
        #[arg(long)]
        family: Family,
        /// Comma-separated, ascending.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_DENSITY)]
        density: f64,
    },
}

fn main() -> ExitCode {
    let code = match Cli::parse().command {
        Command::Color {
            verify,
            trace_json,
            file,
        } => color(&file, verify, trace_json.as_deref()),
        Command::Detect { file } => detect(&file),
        Command::Generate {
            family,
            n,
            density,
            seed,
        } => match generate(family, n, density, seed) {
            Ok(graph) => {
                print!("{}", write_dimacs(&graph));
                exit::OK
            }
            Err(e) => fail(generate_code(&e), e),
        },
        Command::Bench {
            family,
            sizes,
            seed,
            density,
        } => {
            if sizes.windows(2).any(|w| w[0] > w[1]) {
                fail(exit::PARSE, "sizes must be ascending")
            } else {
                match bench(family, &sizes, density, seed) {
                    Ok(table) => {
                        print!("{}", table.render());
                        exit::OK
                    }
                    Err(BenchError::Generate(e)) => fail(generate_code(&e), e),
                    Err(e) => fail(exit::NOT_IN_CLASS, e),
                }
            }
        }
    };
    ExitCode::from(code as u8)
}

fn fail(code: i32, message: impl std::fmt::Display) -> i32 {
    eprintln!("artemis: {message}");
    code
}

fn generate_code(e: &GenerateError) -> i32 {
    match e {
        GenerateError::Oracle(OracleError::BudgetExceeded { .. }) => exit::BUDGET,
        GenerateError::Empty | GenerateError::Density(_) => exit::PARSE,
        _ => exit::NOT_IN_CLASS,
    }
}

fn load(file: &Path) -> Result<ParsedGraph, i32> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| fail(exit::PARSE, format!("{}: {e}", file.display())))?;
    let parsed =
        parse_dimacs(&text).map_err(|e| fail(exit::PARSE, format!("{}: {e}", file.display())))?;
    for warning in parsed.warnings() {
        eprintln!("artemis: warning: {}: {warning}", file.display());
    }
    Ok(parsed)
}

fn describe(witness: &StructureWitness) -> String {
    let ids: Vec<String> = witness
        .vertices
        .iter()
        .map(|v| (v + 1).to_string())
        .collect();
    format!("{:?} on vertices {}", witness.kind, ids.join(" "))
}

fn color(file: &Path, verify: bool, trace_json: Option<&Path>) -> i32 {
    let graph = match load(file) {
        Ok(parsed) => parsed.graph,
        Err(code) => return code,
    };
    let start = Instant::now();
    let (run, verdicts) = if verify {
        match color_and_verify(&graph) {
            VerifyOutcome::NotInClass(witness) => {
                return fail(
                    exit::NOT_IN_CLASS,
                    format!("not in class A: {}", describe(&witness)),
                )
            }
            VerifyOutcome::Engine(e) => return fail(exit::NOT_IN_CLASS, e),
            VerifyOutcome::Ran { run, verdicts } => (*run, Some(verdicts)),
        }
    } else {
        match color_artemis_with(&graph, |_| {}) {
            Ok(run) => (run, None),
            Err(e) => return fail(exit::NOT_IN_CLASS, e),
        }
    };
    let seconds = start.elapsed().as_secs_f64();
    print!("{}", write_coloring(&run.coloring));
    if let Some(path) = trace_json {
        if let Err(e) = std::fs::write(path, TraceFile::from_run(&run).to_json()) {
            return fail(exit::PARSE, format!("{}: {e}", path.display()));
        }
    }
    let passed = verdicts.as_ref().is_none_or(|v| v.all_passed());
    if let Some(v) = &verdicts {
        for note in &v.notes {
            eprintln!("artemis: {note}");
        }
        for failure in &v.failures {
            eprintln!("artemis: check failed: {failure}");
        }
    }
    let report = RunReport {
        input: file.display().to_string(),
        n: graph.n(),
        m: graph.m(),
        num_colors: run.coloring.num_colors,
        contractions: run.trace.len(),
        ops_interesting: run.counters.interesting,
        ops_outer_path: run.counters.outer_path,
        ops_even_pair: run.counters.even_pair,
        seconds,
        verification: verdicts,
    };
    eprintln!("{}", report.to_json());
    if passed {
        exit::OK
    } else {
        exit::NOT_IN_CLASS
    }
}

fn detect(file: &Path) -> i32 {
    let graph = match load(file) {
        Ok(parsed) => parsed.graph,
        Err(code) => return code,
    };
    let budget = OracleBudget::default();
    if graph.n() > budget.max_n {
        return fail(
            exit::BUDGET,
            format!(
                "{} vertices exceeds the detector budget of {}",
                graph.n(),
                budget.max_n
            ),
        );
    }
    let mut found = false;
    for (name, detector) in [
        ("odd-hole", find_odd_hole as fn(&_) -> _),
        ("antihole", find_antihole),
        ("prism", find_prism),
    ] {
        let witness = detector(&graph).expect("within budget");
        if witness.is_none() {
            println!("{name}: none");
        } else {
            found = true;
            let ids: Vec<String> = witness
                .vertices
                .iter()
                .map(|v| (v + 1).to_string())
                .collect();
            println!("{name}: {}", ids.join(" "));
        }
    }
    if found {
        exit::NOT_IN_CLASS
    } else {
        exit::OK
    }
}
