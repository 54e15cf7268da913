//! kronlab: expansions, verification suites and period reports for twisted
//! Kronecker series.

mod commands;
mod config;

use clap::{Parser, Subcommand};
use config::{Form, RunConfig, Suite};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "kronlab", version, about = "Twisted Kronecker series: expansions, identities and periods")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dump the jet of F^chi, or with --product the generating function
    Expand {
        /// The product F^chi F^conj(chi), sliced by weight up to --kmax
        #[arg(long)]
        product: bool,
        /// Use the Fourier route instead of the Eisenstein one
        #[arg(long)]
        fourier: bool,
    },
    /// Run a verification suite; exit code 1 if any check fails
    Verify {
        /// Which family of checks to run
        #[arg(long, value_enum, env = "KRONLAB_SUITE")]
        suite: Suite,
        /// Weight for the periods suite
        #[arg(long)]
        weight: Option<u32>,
        /// Number of sampled points
        #[arg(long, default_value_t = 24)]
        samples: usize,
        /// Character mod this conductor for the rationality snaps (periods suite)
        #[arg(long)]
        snap_level: Option<u64>,
    },
    /// Period polynomial report
    Periods {
        /// Even weight k >= 2
        #[arg(long)]
        weight: u32,
        #[arg(long, value_enum)]
        form: Form,
        /// Atkin-Lehner signs, one per prime divisor of N ("+1,-1") or a single one for all
        #[arg(long, allow_hyphen_values = true)]
        eps: Option<String>,
        /// Periods of the twist by the selected character
        #[arg(long)]
        twisted: bool,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] kronlab::Error),
    #[error("writing the report: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use kronlab::Error as E;
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Core(e) => match e {
                E::InvalidCharacter(_)
                | E::NotSquareFree(_)
                | E::ParityMismatch { .. }
                | E::NotDivisor(..)
                | E::BadWeight(_)
                | E::ExcludedEisenstein
                | E::Config(_) => 2,
                _ => 1,
            },
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.config.sequential {
        kronlab::exec::set_strategy(kronlab::exec::Strategy::Sequential);
    }
    match commands::run(&cli.config, &cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("kronlab: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
