//! `heisplit`: prime splitting in mod-ell Heisenberg extensions of `F_p(t)`.

mod batch;
mod commands;
mod output;
mod primes;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use heisplit_core::report::Format;
use heisplit_core::DEFAULT_SEED;

use crate::primes::PrimeList;

/// Environment variable naming the directory that relative `--output` paths
/// are resolved against.
pub const OUT_DIR_ENV: &str = "HEISPLIT_OUT_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "heisplit",
    version,
    about = "Splitting of (t - a) in mod-ell Heisenberg extensions of F_p(t)"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of stdout; relative paths are resolved
    /// against $HEISPLIT_OUT_DIR when it is set.
    #[arg(short = 'o', long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads (0 = one per core).
    #[arg(short = 'j', long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Base seed; per-point seeds are derived from it and (p, ell, a).
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct Target {
    /// Primes p: a list and/or inclusive ranges, e.g. `13`, `7,13`, `3..200`.
    #[arg(short = 'p', long = "primes")]
    pub p: PrimeList,
    /// The prime ell (must divide p - 1).
    #[arg(short = 'l', long)]
    pub ell: u64,
}

#[derive(Debug, Clone, Args)]
pub struct Point {
    #[command(flatten)]
    pub target: Target,
    #[arg(short = 'a')]
    pub a: u64,
}

#[derive(Debug, Clone, Copy, Default, Args)]
#[group(multiple = false)]
pub struct SplitMode {
    /// Oracle counts only.
    #[arg(long)]
    pub oracle: bool,
    /// Prediction only.
    #[arg(long)]
    pub predict: bool,
    /// Both, with an agreement flag (the default).
    #[arg(long)]
    pub both: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Power residue symbol of a.
    Symbol(Point),
    /// Coefficients of A_ell, constant term first.
    Apoly(Target),
    /// A_ell(a).
    Avalue(Point),
    /// Predicted Frobenius class and prime count.
    Frob(Point),
    /// Number of primes above (t - a).
    Split {
        #[command(flatten)]
        point: Point,
        #[command(flatten)]
        mode: SplitMode,
    },
    /// Prediction and oracle at every admissible a.
    Scan(Target),
    /// Scan plus block determinant and discriminant checks; exit 1 on failure.
    Verify {
        #[command(flatten)]
        target: Target,
        /// Block determinant trials per block size.
        #[arg(long, default_value_t = 25)]
        trials: usize,
    },
    /// Histogram of predicted Frobenius classes.
    Stats(Target),
    /// Randomized block determinant trials.
    Detlemma {
        #[command(flatten)]
        target: Target,
        /// Block size.
        #[arg(short = 'n', long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Discriminant ratio between two specializations.
    Disc {
        #[command(flatten)]
        point: Point,
        #[arg(long)]
        a2: u64,
        /// Permit ell >= 5 (large matrices over large fields).
        #[arg(long)]
        allow_large_ell: bool,
    },
    /// Run jobs from a file, one `key=value ...` line per job.
    Batch { file: PathBuf },
}

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    Failure = 1,
    Usage = 2,
}

pub fn run(cli: Cli) -> Status {
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.global.jobs)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return Status::Failure;
        }
    };
    pool.install(|| match &cli.command {
        Command::Batch { file } => batch::run_file(file, &cli.global),
        command => commands::dispatch(command, &cli.global),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(run(cli) as u8)
}
