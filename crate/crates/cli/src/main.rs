//! `zagreb`: compute multiplicative Zagreb indices of trees, build extremal
//! trees for a class, enumerate trees and check the closed-form bounds
//! against exhaustive search.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 parse error,
//! 3 domain error.

mod commands;
mod input;

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use zagreb_core::{Goal, Index};

#[derive(Debug, Parser)]
#[command(
    name = "zagreb",
    version,
    about = "Multiplicative Zagreb indices of trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report n, degree sequence, Δ, k, M1, M2, Π1 and Π2 for every input tree.
    Compute {
        #[arg(long, value_enum, default_value_t = ComputeFormat::Json)]
        format: ComputeFormat,
        /// graph6 lines or blank-line separated edge lists; `-` reads stdin.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Emit an extremal tree for the class of trees on `n` vertices with
    /// exactly `k` vertices of maximum degree.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        index: Index,
        #[arg(long)]
        goal: Goal,
        #[arg(long, value_enum, default_value_t = TreeFormat::Graph6)]
        format: TreeFormat,
    },
    /// List every non-isomorphic tree on `n` vertices, optionally only those
    /// with exactly `k` vertices of maximum degree.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = TreeFormat::Graph6)]
        format: TreeFormat,
    },
    /// Check every bound and extremal sequence against exhaustive
    /// enumeration for 4 <= n <= N.
    Verify {
        #[arg(long)]
        n_max: usize,
        /// Write the full report; CSV if the path ends in `.csv`, else JSON.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Worker threads (0 lets the runtime decide).
        #[arg(long, env = "ZAGREB_JOBS")]
        jobs: Option<usize>,
    },
    /// Print the four closed-form bounds for every admissible class with
    /// n in the given range.
    Table {
        #[arg(long)]
        n_from: usize,
        #[arg(long)]
        n_to: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long, env = "ZAGREB_JOBS")]
        jobs: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ComputeFormat {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TreeFormat {
    Graph6,
    Edgelist,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Text,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Mismatch(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Parse { .. } | CliError::Input(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 3,
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Compute { format, input } => commands::compute(&input, format),
        Command::Construct {
            n,
            k,
            index,
            goal,
            format,
        } => commands::construct(n, k, index, goal, format),
        Command::Enumerate { n, k, format } => commands::enumerate(n, k, format),
        Command::Verify {
            n_max,
            report,
            jobs,
        } => commands::verify(n_max, report.as_deref(), jobs),
        Command::Table {
            n_from,
            n_to,
            format,
            jobs,
        } => commands::table(n_from, n_to, format, jobs),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        // a closed pipe downstream is not an error for a filter
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("zagreb: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
