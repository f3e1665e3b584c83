//! `drazinkit`: compute and check Drazin-type inverses and quadruple
//! transfer formulas from the command line.
//!
//! Reports go to standard output (or `--out`) as JSON. Exit status is 0 when
//! the requested property holds, 1 when the input is well formed but is
//! rejected (relations fail, no inverse, ...), and 2 for malformed input; in
//! the last two cases a JSON error object is written to standard error.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use drazinkit::drazin::InverseFlavor;

use commands::{CliError, Outcome};

/// Environment variable that takes precedence over `--seed`.
const SEED_ENV: &str = "DRAZINKIT_SEED";

#[derive(Parser)]
#[command(name = "drazinkit", version, about = "Exact Drazin-type inverses in matrix rings")]
struct Cli {
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Flavor {
    Drazin,
    Group,
    Pdrazin,
    Gdrazin,
}

impl From<Flavor> for InverseFlavor {
    fn from(f: Flavor) -> Self {
        match f {
            Flavor::Drazin => InverseFlavor::Drazin,
            Flavor::Group => InverseFlavor::Group,
            Flavor::Pdrazin => InverseFlavor::PDrazin,
            Flavor::Gdrazin => InverseFlavor::GDrazin,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Exhaustive,
    LinearSolve,
    Classical,
    PaperFixtures,
}

#[derive(Subcommand)]
enum Command {
    /// Replay one of the worked quadruples (2.4, 2.5 or 3.6).
    Demo {
        #[arg(long)]
        example: String,
    },
    /// Check bdb = bac and dbd = acd for a quadruple.
    Verify {
        /// Quadruple JSON: a file path, inline JSON, or `-` for stdin.
        #[arg(long = "in", value_name = "QUAD")]
        input: String,
    },
    /// Compute or look up an inverse of a matrix and certify it.
    Drazin {
        /// Matrix JSON: a file path, inline JSON, or `-` for stdin.
        #[arg(long = "in", value_name = "MATRIX")]
        input: String,
        #[arg(long, value_enum, default_value = "drazin")]
        flavor: Flavor,
    },
    /// Transfer an inverse of ac to bd as b h^2 d and certify it.
    Cline {
        #[arg(long = "in", value_name = "QUAD")]
        input: String,
        #[arg(long, value_enum, default_value = "drazin")]
        flavor: Flavor,
    },
    /// Invert 1 - b(d/λ) as 1 + b(1 - (a/λ)c)^-1 (d/λ).
    Jacobson {
        #[arg(long = "in", value_name = "QUAD")]
        input: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
    },
    /// Compare nonzero spectra of ac and bd and check invertibility transfer.
    Spectrum {
        #[arg(long = "in", value_name = "QUAD")]
        input: String,
        /// Comma-separated nonzero rationals; defaults to a fixed list plus
        /// the rational eigenvalues of ac and bd.
        #[arg(long, allow_hyphen_values = true)]
        lambdas: Option<String>,
    },
    /// Emit quadruples as JSON lines.
    Search {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, value_enum)]
        strategy: Strategy,
        /// Candidate cap for exhaustive search, number of draws otherwise.
        #[arg(long, default_value_t = drazinkit::lab::DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = drazinkit::lab::DEFAULT_SEED)]
        seed: u64,
    },
    /// Every inverse of the given flavor, by brute force over a finite ring.
    Oracle {
        #[arg(long = "in", value_name = "MATRIX")]
        input: String,
        /// Ring to read the entries in; defaults to the matrix's own ring.
        #[arg(long)]
        ring: Option<String>,
        #[arg(long, value_enum, default_value = "drazin")]
        flavor: Flavor,
    },
}

fn seed_override(seed: u64) -> Result<u64, CliError> {
    match std::env::var(SEED_ENV) {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("{SEED_ENV}={text:?} is not an unsigned integer"))),
        Err(_) => Ok(seed),
    }
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Demo { example } => commands::demo(&example),
        Command::Verify { input } => commands::verify(&input),
        Command::Drazin { input, flavor } => commands::drazin(&input, flavor.into()),
        Command::Cline { input, flavor } => commands::cline(&input, flavor.into()),
        Command::Jacobson { input, lambda } => commands::jacobson(&input, &lambda),
        Command::Spectrum { input, lambdas } => commands::spectrum(&input, lambdas.as_deref()),
        Command::Search { ring, dim, strategy, budget, seed } => {
            let strategy = match strategy {
                Strategy::Exhaustive => drazinkit::lab::SearchStrategy::Exhaustive,
                Strategy::LinearSolve => drazinkit::lab::SearchStrategy::LinearSolve,
                Strategy::Classical => drazinkit::lab::SearchStrategy::Classical,
                Strategy::PaperFixtures => drazinkit::lab::SearchStrategy::PaperFixtures,
            };
            commands::search(&ring, dim, strategy, budget, seed_override(seed)?)
        }
        Command::Oracle { input, ring, flavor } => {
            commands::oracle(&input, ring.as_deref(), flavor.into())
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli.out, &outcome.text) {
                eprintln!("{}", CliError::usage(format!("cannot write report: {e}")).to_json());
                return ExitCode::from(2);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                let e = serde_json::json!({
                    "error": "Rejected",
                    "message": "the checked property does not hold; the report lists the witnesses",
                });
                eprintln!("{e}");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code())
        }
    }
}
