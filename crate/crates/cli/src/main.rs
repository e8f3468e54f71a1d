//! `hyperex`: constructions, pattern queries, bounds, exact search and the
//! verification suite from the command line.
//!
//! JSON goes to stdout and a one-line summary to stderr. Exit codes: 0 ok,
//! 1 a check failed, 2 usage or input error, 3 a search budget ran out.

mod bounds;
mod construct;
mod input;
mod search;
mod solve;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "hyperex", version, about = "Turán numbers of disjoint copies of hypergraphs")]
pub struct Cli {
    /// Worker threads for searches and checks.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Seed for the random corpora of `verify`.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// JSON-lines ex-table to read known values from; `search` writes its
    /// results back to it.
    #[arg(long, global = true)]
    pub ex_table: Option<PathBuf>,
    /// Node cap per search.
    #[arg(long, global = true)]
    pub node_cap: Option<u64>,
    /// Wall-clock cap per search, in seconds. Results under a wall cap are
    /// not reproducible.
    #[arg(long, global = true)]
    pub wall_cap: Option<f64>,
    /// Directory for output files.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a construction in the text format.
    Construct(construct::Args),
    /// Run a pattern query on a host.
    Solve(solve::Args),
    /// Evaluate a bound formula.
    Bounds(bounds::Args),
    /// Compute an exact extremal number.
    Search(search::Args),
    /// Run the verification suite.
    Verify(verify::VerifyArgs),
    /// Emit `t,bound,exact,construction` rows as CSV.
    Scan(verify::ScanArgs),
}

impl Cli {
    pub fn wall_cap(&self) -> anyhow::Result<Option<Duration>> {
        match self.wall_cap {
            None => Ok(None),
            Some(s) if s.is_finite() && s >= 0.0 => Ok(Some(Duration::from_secs_f64(s))),
            Some(s) => Err(usage(format!("--wall-cap must be a non-negative number of seconds, got {s}"))),
        }
    }

    pub fn run_options(&self) -> anyhow::Result<hyperex_verify::RunOptions> {
        Ok(hyperex_verify::RunOptions {
            threads: self.threads.max(1),
            wall_cap: self.wall_cap()?,
        })
    }
}

/// An error in the user's input. Every error exits with code 2.
pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::msg(msg.into())
}

pub fn print_json(v: &impl serde::Serialize) -> anyhow::Result<()> {
    print_stdout(&format!("{}\n", serde_json::to_string_pretty(v)?))
}

/// Writes to stdout, treating a closed pipe as success.
pub fn print_stdout(text: &str) -> anyhow::Result<()> {
    use std::io::Write;
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Construct(a) => construct::run(&cli, a),
        Command::Solve(a) => solve::run(&cli, a),
        Command::Bounds(a) => bounds::run(&cli, a),
        Command::Search(a) => search::run(&cli, a),
        Command::Verify(a) => verify::run_verify(&cli, a),
        Command::Scan(a) => verify::run_scan(&cli, a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
