//! `trialg`: verification reports for the trialgebra workbench.

mod commands;
mod render;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use trialgebra::sampling::DEFAULT_SEED;
use trialgebra::series::DEFAULT_ORDER;

/// Environment variable capping the worker threads used by the homology
/// rank computations.
const THREADS_VAR: &str = "TRIALG_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "trialg",
    version,
    about = "Exact checks for associative, dendriform and cubical trialgebras"
)]
struct Cli {
    /// Output format; text is rendered from the JSON payload.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Include the wall time in the report (makes the output run-dependent).
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count (and optionally list) the basis sets T_n, P_n and Q_n.
    Enumerate(EnumerateArgs),
    /// Run a theory's relation suite on basis triples.
    Axioms(AxiomsArgs),
    /// Koszul duality of the weight-3 relation spaces.
    Koszul,
    /// Exact homology of the weight-m chain complex of a free algebra.
    Homology(HomologyArgs),
    /// Generating-series identities.
    Series(SeriesArgs),
    /// Run the full acceptance suite.
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum BasisSet {
    /// Planar trees T_n.
    Trees,
    /// Marked words P_n.
    Subsets,
    /// Cube words Q_n.
    Cubes,
}

#[derive(Args, Debug, Serialize)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    what: BasisSet,
    /// Degree (trees) or length (subsets, cubes).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=10))]
    n: u32,
    /// Also count by grade: vertices for trees, marks for subsets, zeros for cubes.
    #[arg(long)]
    by_grade: bool,
    /// Print the objects themselves.
    #[arg(long)]
    list: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum AxiomTheoryArg {
    Trias,
    Tridend,
    Tricub,
    Qsym,
    Solomon,
}

#[derive(Args, Debug, Serialize)]
struct AxiomsArgs {
    #[arg(long, value_enum)]
    theory: AxiomTheoryArg,
    /// Largest total weight of the exhaustively checked triples.
    #[arg(long, value_parser = clap::value_parser!(u32).range(3..=9))]
    max_weight: u32,
    /// Number of additional random triples above the exhaustive range.
    #[arg(long)]
    random: Option<usize>,
    /// Seed for the random triples.
    #[arg(long, default_value_t = DEFAULT_SEED, requires = "random")]
    seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum HomologyTheory {
    Trias,
    Tridend,
    Tricub,
}

#[derive(Args, Debug, Serialize)]
struct HomologyArgs {
    #[arg(long, value_enum)]
    theory: HomologyTheory,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=7))]
    weight: u32,
    /// Also report the Betti numbers of each evaluation-class block (trias, tricub).
    #[arg(long)]
    per_class: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum SeriesCheck {
    /// Simplex and associahedron series are compositional inverses.
    Inverse,
    /// Rational closed forms against enumeration.
    ClosedForm,
    /// The cube series is an involution.
    SelfDual,
    /// All of the above plus the Catalan specialisations.
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum FamilyArg {
    Simplex,
    Associahedron,
    Cube,
}

#[derive(Args, Debug, Serialize)]
struct SeriesArgs {
    /// Truncation order in x.
    #[arg(long, default_value_t = DEFAULT_ORDER as u32, value_parser = clap::value_parser!(u32).range(1..=40))]
    order: u32,
    #[arg(long, value_enum, default_value_t = SeriesCheck::All)]
    check: SeriesCheck,
    /// Restrict the emitted coefficient tables to one family.
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
}

/// Top-level report; field order is part of the output format.
#[derive(Serialize)]
struct Report {
    schema: u32,
    command: &'static str,
    params: serde_json::Value,
    result: serde_json::Value,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_s: Option<f64>,
}

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .map_err(|_| format!("{THREADS_VAR} must be a positive integer, got {value:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("trialg: {e}");
        return ExitCode::from(2);
    }
    let start = Instant::now();
    let outcome = commands::run(&cli.command);
    let (command, params, result, passed) = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("trialg: internal invariant violated: {e}");
            return ExitCode::from(3);
        }
    };
    let report = Report {
        schema: 1,
        command,
        params,
        result,
        verdict: if passed { "pass" } else { "fail" },
        wall_time_s: cli.timing.then(|| start.elapsed().as_secs_f64()),
    };
    let value = serde_json::to_value(&report).expect("report serializes");
    match cli.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("report serializes")
        ),
        Format::Text => print!("{}", render::text(&value)),
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
