mod commands;
mod input;

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use trilist::algo::KPolicy;
use trilist::alloc::CountingAllocator;
use trilist::generator::GenSpec;
use trilist::Algorithm;

use crate::input::{Format, InputError};

#[global_allocator]
static ALLOC: CountingAllocator = CountingAllocator;

/// Triangle listing, counting and clustering statistics for large sparse
/// graphs.
#[derive(Debug, Parser)]
#[command(name = "trilist", version)]
struct Cli {
    /// More logging (-v info, -vv debug). RUST_LOG overrides.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the number of triangles.
    Count(RunArgs),
    /// Print every triangle as "a b c" with a < b < c.
    List(RunArgs),
    /// Print "v T[v]", the number of triangles at each vertex.
    Pseudolist(RunArgs),
    /// Transitivity, average clustering, degree histogram and power-law fit.
    Stats(RunArgs),
    /// Time a K sweep (tab-separated "K n_K millis"), or compare algorithms.
    #[command(alias = "tune-k")]
    Bench(BenchArgs),
    /// Rewrite a graph as an edge list or in the binary format.
    Convert(ConvertArgs),
}

#[derive(Debug, Args)]
struct Source {
    /// Graph file ("-" for stdin).
    #[arg(long, value_name = "PATH", required_unless_present = "gen", conflicts_with = "gen")]
    input: Option<PathBuf>,

    /// Generate instead: KIND,key=value,...[,SEED], e.g. powerlaw,n=100000,alpha=2.5,seed=7.
    #[arg(long, value_name = "SPEC")]
    gen: Option<GenSpec>,

    #[arg(long, value_enum, default_value_t = Format::Auto)]
    format: Format,
}

#[derive(Debug, Args)]
struct AlgoArgs {
    /// Degree threshold: an integer, or auto:RULE with RULE one of sqrt-m,
    /// powerlaw, ayz-pseudo, sqrt-mlogn, ayz-pseudo-powerlaw.
    #[arg(long, value_name = "K")]
    k: Option<KPolicy>,

    /// Power-law exponent for the powerlaw K rules.
    #[arg(long)]
    alpha: Option<f64>,

    /// Matrix multiplication exponent for the ayz-pseudo K rules.
    #[arg(long, default_value_t = 3.0)]
    omega: f64,

    /// Refuse algorithms that need an n x n bit matrix above this many vertices.
    #[arg(long, value_name = "N", default_value_t = 20_000)]
    max_matrix_n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Count,
    List,
    PerVertex,
    Stats,
    JsonSummary,
}

#[derive(Debug, Args)]
struct RunArgs {
    #[command(flatten)]
    source: Source,

    #[arg(long, default_value_t = Algorithm::CompactForward)]
    algo: Algorithm,

    #[command(flatten)]
    tuning: AlgoArgs,

    /// Override the subcommand's output.
    #[arg(long, value_enum)]
    output: Option<Mode>,

    /// Sort listed triangles.
    #[arg(long)]
    sorted: bool,

    /// Write here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[command(flatten)]
    source: Source,

    /// Algorithm whose K is swept.
    #[arg(long, default_value_t = Algorithm::NewListing)]
    algo: Algorithm,

    #[command(flatten)]
    tuning: AlgoArgs,

    /// Comma-separated thresholds (default: 0, powers of two, d_max + 1).
    #[arg(long, value_delimiter = ',')]
    ks: Option<Vec<usize>>,

    /// Time these algorithms against each other instead of sweeping K.
    /// With no list, every algorithm the matrix cap allows.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    compare: Option<Vec<Algorithm>>,

    /// Runs per configuration; the minimum is reported.
    #[arg(long, default_value_t = 3)]
    repeat: usize,

    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ConvertArgs {
    #[command(flatten)]
    source: Source,

    #[arg(long, value_enum)]
    to: Target,

    #[arg(long, value_name = "PATH")]
    out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Text,
    Binary,
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<InputError>().is_some() {
        return 2;
    }
    match err.downcast_ref::<trilist::Error>() {
        Some(trilist::Error::Usage(_)) => 64,
        Some(trilist::Error::Consistency(_)) => 70,
        _ => 1,
    }
}

fn broken_pipe(err: &anyhow::Error) -> bool {
    err.chain().any(|e| {
        let io = e.downcast_ref::<io::Error>().or_else(|| match e.downcast_ref::<trilist::Error>() {
            Some(trilist::Error::Io(io)) => Some(io),
            _ => None,
        });
        io.is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe)
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(64),
            };
        }
    };
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();

    let result = match cli.command {
        Command::Count(args) => commands::run(args, Mode::Count),
        Command::List(args) => commands::run(args, Mode::List),
        Command::Pseudolist(args) => commands::run(args, Mode::PerVertex),
        Command::Stats(args) => commands::run(args, Mode::Stats),
        Command::Bench(args) => commands::bench(args),
        Command::Convert(args) => commands::convert(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("trilist: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
