use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod plot;

use commands::CliError;

/// Exact constructions on real rational surfaces.
///
/// Every subcommand reads one JSON document (or a model in the text
/// grammar for `classify` and `reduce`) and writes JSON, or CSV for `plot`.
#[derive(Debug, Parser)]
#[command(name = "realmodels", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    run: RunConfig,
}

#[derive(Debug, Args)]
struct RunConfig {
    /// Read input from this file (`-` for stdin).
    #[arg(long, global = true, conflicts_with = "inline")]
    input: Option<PathBuf>,

    /// Input given directly on the command line.
    #[arg(long, global = true)]
    inline: Option<String>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Print progress to stderr.
    #[arg(long, short, global = true)]
    verbose: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a certified torus diffeomorphism sending sources to targets.
    Transit,
    /// Re-certify a torus map and optionally spot-check its inverse.
    Certify {
        /// Random points to push through `f⁻¹ ∘ f`.
        #[arg(long, default_value_t = 0)]
        samples: usize,
    },
    /// Strictly positive interpolant, or a zero-free ratio with `den_values`.
    Interpolate,
    /// Count distinct real roots in `(lo, hi]`.
    Sturm,
    /// Real locus, canonical model and reduction trace of a blow-up model.
    Classify,
    /// Flatten the forest of infinitely-near centers of a blow-up of P2.
    Reduce,
    /// Reduce F_d to F_0 or F_1.
    Hirzebruch,
    /// Conic through five points of P2 over Q(i).
    Conic,
    /// Check a six-point configuration over Q(i).
    ValidateSix,
    /// Transfer points between P2 and P1 x P1.
    P2Transfer,
    /// Sample a torus map on a rational grid and write CSV.
    Plot {
        /// `lo,hi,n`: n evenly spaced rationals per axis.
        #[arg(long, default_value = "-2,2,5", allow_hyphen_values = true)]
        grid: String,
    },
}

fn read_input(run: &RunConfig) -> Result<String, CliError> {
    match (&run.input, &run.inline) {
        (Some(_), Some(_)) => Err(CliError::Input(
            "give exactly one of --input and --inline".into(),
        )),
        (None, None) => Err(CliError::Input(
            "no input: pass --input PATH or --inline TEXT".into(),
        )),
        (None, Some(text)) => Ok(text.clone()),
        (Some(p), None) if p.as_os_str() == "-" => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
        (Some(p), None) => fs::read_to_string(p)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", p.display()))),
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let input = read_input(&cli.run)?;
    let run = &cli.run;
    match &cli.command {
        Command::Transit => commands::transit(&input, run.verbose),
        Command::Certify { samples } => commands::certify(&input, *samples, run.seed),
        Command::Interpolate => commands::interpolate(&input),
        Command::Sturm => commands::sturm(&input),
        Command::Classify => commands::classify(&input),
        Command::Reduce => commands::reduce(&input),
        Command::Hirzebruch => commands::hirzebruch(&input),
        Command::Conic => commands::conic(&input),
        Command::ValidateSix => commands::validate_six(&input),
        Command::P2Transfer => commands::p2_transfer(&input),
        Command::Plot { grid } => plot::plot(&input, grid),
    }
}

fn emit(out: &str, path: Option<&PathBuf>) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, out),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(out.as_bytes())?;
            if !out.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.run.verbose {
        eprintln!("realmodels: {:?}", cli.command);
    }
    let result = run(&cli).and_then(|out| match emit(&out, cli.run.output.as_ref()) {
        // reader closed the pipe early, e.g. `| head`
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => other.map_err(CliError::from),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
