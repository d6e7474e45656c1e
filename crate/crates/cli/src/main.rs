//! `hoggatt`: triangles, identity sweeps, conjecture probes, tableau counts
//! and exports for the generalized Pascal-triangle families.
//!
//! Exit status: 0 on success, 1 when an identity fails, 2 on a usage or
//! parameter error.

mod commands;
mod options;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hoggatt::par::{configure_threads, Execution};

use commands::{CmdResult, Failure};

#[derive(Parser, Debug)]
#[command(name = "hoggatt", version, about = "Exact generalized Pascal triangles and their determinant identities")]
struct Cli {
    /// Worker threads for cell-parallel work
    #[arg(long, global = true, env = "HOGGATT_THREADS")]
    threads: Option<usize>,
    /// Run every cell on the calling thread
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print rows of a triangle
    Triangle(commands::TriangleArgs),
    /// Print one coefficient
    Coeff(commands::CoeffArgs),
    /// Check determinant identities, one report per cell
    Verify(commands::VerifyArgs),
    /// Probe the Narayana-type conjectures on a grid
    Conjecture(commands::ConjectureArgs),
    /// Count rectangular semistandard tableaux three ways
    Ssyt(commands::SsytArgs),
    /// Column generating functions and their kernels
    Series(commands::SeriesArgs),
    /// Write a triangle as a b-file or CSV
    Export(commands::TriangleArgs),
}

fn run(cli: &Cli) -> CmdResult {
    if let Some(threads) = cli.threads {
        configure_threads(threads)?;
    }
    let exec = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    match &cli.command {
        Command::Triangle(a) => commands::cmd_triangle(a, exec),
        Command::Coeff(a) => commands::cmd_coeff(a),
        Command::Verify(a) => commands::cmd_verify(a, exec),
        Command::Conjecture(a) => commands::cmd_conjecture(a, exec),
        Command::Ssyt(a) => commands::cmd_ssyt(a, exec),
        Command::Series(a) => commands::cmd_series(a),
        Command::Export(a) => commands::cmd_export(a, exec),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
