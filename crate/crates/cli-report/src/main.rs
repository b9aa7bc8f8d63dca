//! Command line entry point. Exit codes: zero for success, one when a
//! verification property fails, two when an input is structurally invalid,
//! three when an input or the command line cannot be read.

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use cli_report::verify::Suite;
use cli_report::{analyze, torus, verify, Format};
use flat_bigc::DeltaPair;

#[derive(Parser)]
#[command(
    name = "bigc",
    version,
    about = "Exact cohomology tables and identity suites for bounded double complexes and flat torus models"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a double complex and report its cohomology tables, lattice
    /// invariants, lemma verdicts, natural map flags, and equivalences.
    Analyze {
        /// JSON description of the double complex.
        #[arg(long)]
        input: PathBuf,
        /// Write the report here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Report layout: json, csv, or text.
        #[arg(long, default_value = "json", value_parser = parse_format)]
        format: Format,
    },
    /// Combine cohomology tables of a torus model over a box of modes.
    Torus {
        /// JSON description of the model.
        #[arg(long)]
        model: PathBuf,
        /// Scan every mode with coordinates in [-R, R].
        #[arg(long, value_name = "R", default_value_t = 1)]
        mode_box: i64,
        /// Comma separated theories: bc, aeppli, dprime, dsecond, derham.
        #[arg(long, default_value = "bc,aeppli,dprime,dsecond,derham")]
        theories: String,
        /// Anticommuting component pair forming the complex: pp, pb, bp, bb.
        #[arg(long, default_value = "pp", value_parser = parse_pair)]
        pair: DeltaPair,
        /// Write the report here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Report layout: json, csv, or text.
        #[arg(long, default_value = "json", value_parser = parse_format)]
        format: Format,
    },
    /// Run a seeded identity suite and report per property pass counts.
    Verify {
        /// Which suite to run: core, geometry, or all.
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        /// Seed for the case generator.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Randomized cases per property.
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn parse_pair(s: &str) -> Result<DeltaPair, String> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let result = match cli.command {
        Cmd::Analyze {
            input,
            output,
            format,
        } => analyze::run(&input, output.as_deref(), format),
        Cmd::Torus {
            model,
            mode_box,
            theories,
            pair,
            output,
            format,
        } => torus::run(&model, mode_box, &theories, pair, output.as_deref(), format),
        Cmd::Verify { suite, seed, count } => verify::run(suite, seed, count),
    };
    if let Err(failure) = result {
        eprintln!("{}", failure.message);
        std::process::exit(i32::from(failure.code));
    }
}
