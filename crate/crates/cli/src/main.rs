//! `netlap` — exact matrices and counting censuses for simple signed graphs.
//!
//! Every value is computed over the Gaussian integers with exact arithmetic.
//! The `verify` command evaluates each counting identity from both sides —
//! determinants on one, brute-force subgraph enumeration on the other — and
//! reports a pass/fail line per check.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{CensusArgs, DotArgs, MatricesArgs, VerifyArgs};

#[derive(Parser, Debug)]
#[command(name = "netlap", version, about = "Exact matrix zoo and counting censuses for signed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the nine matrices of a signed graph
    Matrices(MatricesArgs),
    /// Count spanning trees and odd-unicyclic subgraphs, checking both routes
    Census(CensusArgs),
    /// Run the full identity suite with one pass/fail line per check
    Verify(VerifyArgs),
    /// Emit the graph as Graphviz DOT
    Dot(DotArgs),
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Graph(#[from] signed_graph_core::GraphError),
    #[error(transparent)]
    Zoo(#[from] matrix_zoo::ZooError),
    #[error(transparent)]
    Census(#[from] census::CensusError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

fn main() -> ExitCode {
    // Rust ignores SIGPIPE by default, so a reader that closes early (for
    // example `netlap … | head`) would turn every later print into a panic.
    // Restore the conventional behavior: terminate quietly like other
    // line-oriented tools.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Matrices(args) => commands::matrices(args),
        Command::Census(args) => commands::census(args),
        Command::Verify(args) => commands::verify(args),
        Command::Dot(args) => commands::dot(args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
