//! Command-line front end: parse model files, run the exact checks and
//! computations, and emit deterministic reports.
//!
//! Exit codes: 0 — all checks passed; 1 — a mathematical check failed (a
//! counterexample is in the report); 2 — input or usage error.

mod commands;
mod model;
mod report;

use clap::{Parser, Subcommand, ValueEnum};
use report::Format;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "ultracalc", version, about = "Exact conic analysis at desk scale")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for reports and dumps.
    #[arg(long, global = true, value_enum, default_value_t = CliFormat::Text)]
    format: CliFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliFormat {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a model file and validate every structure in it.
    Validate {
        #[arg(long)]
        model: PathBuf,
    },
    /// Colimit of a system (optionally restricted to a subset of elements).
    Colimit {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        system: String,
        /// Comma-separated element names.
        #[arg(long)]
        subset: Option<String>,
    },
    /// Check localizability conditions of a system over its quasi-lattice.
    Check {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        system: String,
        /// Comma-separated: I, II, III, IIIprime.
        #[arg(long, default_value = "I,II,III")]
        conditions: String,
        /// Family-size cap for the family gluing condition.
        #[arg(long)]
        family_cap: Option<usize>,
    },
    /// Push a system forward along a morphism; dumps a model document.
    Pushforward {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        system: String,
        #[arg(long)]
        morphism: String,
    },
    /// Simplicial covering from k+1 vectors; dumps the derived cones.
    Cover {
        /// Vectors as "x1,y1;x2,y2;...", rational coordinates.
        #[arg(long)]
        vectors: String,
        /// Optional model file providing the form.
        #[arg(long)]
        model: Option<PathBuf>,
        /// Named form in the model; the standard form if omitted.
        #[arg(long)]
        form: Option<String>,
    },
    /// Fourier transform of a functional; prints the canonical pair.
    Fourier {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        functional: String,
    },
    /// Run the seeded verification suites.
    Selftest {
        /// Suite name or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 20260808)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        CliFormat::Text => Format::Text,
        CliFormat::Structured => Format::Structured,
    };
    let start = Instant::now();
    let result = commands::run(cli.command, format);
    eprintln!("elapsed: {:?}", start.elapsed());
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
