//! The `rcm` command line: generate colourings, find and verify connected
//! clique matchings, decide small instances exactly and compute tiny Ramsey
//! values.
//!
//! Exit codes: 0 ok or yes, 1 I/O or parse error, 2 bad parameters,
//! 3 structure violation, 4 certificate rejected, 5 decision no,
//! 6 budget exhausted or value unknown.

mod commands;
mod report;
mod stress;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rcm_core::format::ParseError;
use rcm_core::oracle::Mode;
use rcm_core::rng::Probability;
use thiserror::Error;

pub use report::{digest, RunReport};

pub mod exit {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    pub const PRECONDITION: i32 = 2;
    pub const VIOLATION: i32 = 3;
    pub const REJECTED: i32 = 4;
    pub const NO: i32 = 5;
    pub const UNKNOWN: i32 = 6;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } => exit::IO,
            CliError::Precondition(_) => exit::PRECONDITION,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "rcm", version, about = "Monochromatic connected clique matchings in 2-coloured complete graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a colouring in rcm format.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Find a monochromatic connected nK_r and write its certificate.
    Find(FindArgs),
    /// Check a certificate against a colouring.
    Verify(VerifyArgs),
    /// Decide exactly whether a colouring contains a monochromatic nK_r.
    Decide(DecideArgs),
    /// Compute R(c(nK_r)) by exhaustive search.
    Ramsey(RamseyArgs),
    /// Run find and verify over a seeded corpus at the theorem bound.
    Stress(StressArgs),
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Extremal colouring: r − 1 blue cliques of size rn − 1 and one of size
    /// n − 1, red between them.
    Burr {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Each pair red independently with probability p.
    Random {
        #[arg(long = "N", visible_alias = "vertices")]
        vertices: usize,
        #[arg(long)]
        p: Probability,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Extremal colouring plus one vertex with seeded colours, then `flips`
    /// distinct pairs toggled.
    PerturbedBurr {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        flips: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct FindArgs {
    #[arg(long, value_name = "FILE")]
    pub input: PathBuf,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub n: usize,
    /// Certificate destination; stdout when absent.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Upper bound on R(K_r), required for r ≥ 5.
    #[arg(long)]
    pub ramsey_bound: Option<usize>,
    /// Write the key=value structure report here.
    #[arg(long, value_name = "FILE")]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_name = "FILE")]
    pub colouring: PathBuf,
    #[arg(long, value_name = "FILE")]
    pub certificate: PathBuf,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct DecideArgs {
    #[arg(long, value_name = "FILE")]
    pub input: PathBuf,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "connected")]
    pub mode: Mode,
    /// Search node budget.
    #[arg(long, default_value_t = rcm_core::oracle::DEFAULT_NODE_BUDGET)]
    pub budget: u64,
    /// Witness destination; stdout when absent.
    #[arg(long, value_name = "FILE")]
    pub witness_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RamseyArgs {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m_max: usize,
    /// Leaf budget of the exhaustive search.
    #[arg(long, default_value_t = rcm_core::oracle::DEFAULT_LEAF_BUDGET)]
    pub budget: u64,
    /// Where to write a colouring of K_{m-1} without the structure.
    #[arg(long, value_name = "FILE")]
    pub witness_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    Random,
    PerturbedBurr,
}

#[derive(Debug, Args)]
pub struct StressArgs {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub count: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, value_enum)]
    pub family: Family,
    /// Red probabilities for the random family, used in turn.
    #[arg(long, value_delimiter = ',', default_value = "0.1,0.5,0.9")]
    pub p: Vec<Probability>,
    /// Flip counts for the perturbed family, used in turn.
    #[arg(long, value_delimiter = ',', default_value = "1,10,100")]
    pub flips: Vec<usize>,
    #[arg(long)]
    pub ramsey_bound: Option<usize>,
    /// Directory for violation dumps; stderr when absent.
    #[arg(long, value_name = "DIR")]
    pub dump_dir: Option<PathBuf>,
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return exit::PRECONDITION;
            }
            let _ = write!(out, "{e}");
            return exit::OK;
        }
    };
    let result = match cli.command {
        Command::Gen { kind } => commands::gen(kind, out, err),
        Command::Find(args) => commands::find(args, out, err),
        Command::Verify(args) => commands::verify(args, out, err),
        Command::Decide(args) => commands::decide(args, out, err),
        Command::Ramsey(args) => commands::ramsey(args, out, err),
        Command::Stress(args) => stress::stress(args, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
