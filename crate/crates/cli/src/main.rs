//! `zdlab`: reports on zero divisors of group algebras acting on ℓ^p.

mod commands;
mod error;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use error::CliError;
use report::Report;

#[derive(Parser)]
#[command(name = "zdlab", version, about = "Zero divisor workbench for ℂℤ^d and ℂF_k")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convolve two element files and report norms of the product.
    Convolve(ConvolveArgs),
    /// Zero sets and exponent verdicts for an element of ℂℤ^d.
    Torus(TorusArgs),
    /// Transform zeros, critical exponent and witnesses of a radial element.
    Radial(RadialArgs),
    /// Subgroup automata and the transfer witness for sums of generators.
    Free(FreeArgs),
    /// Randomized invariant checks and fixture replays.
    Selftest(SelftestArgs),
}

#[derive(Args)]
pub struct ConvolveArgs {
    pub left: PathBuf,
    pub right: PathBuf,
    /// Write the product to this file instead of the report.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct TorusArgs {
    pub input: PathBuf,
    /// Sample the zero set of the transform.
    #[arg(long)]
    pub zeroset: bool,
    /// Write the sampled zeros as CSV.
    #[arg(long, requires = "zeroset")]
    pub csv: Option<PathBuf>,
    /// Check the sample against the hyperplanes listed in this file.
    #[arg(long)]
    pub hyperplanes: Option<PathBuf>,
    /// Estimate the relative nullity of the zero set.
    #[arg(long)]
    pub nullity: bool,
    /// Report the exponent verdicts at --p.
    #[arg(long, requires = "p")]
    pub verdict: bool,
    #[arg(long)]
    pub p: Option<String>,
    #[arg(long, default_value_t = 64)]
    pub resolution: usize,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[arg(long, default_value_t = 1e-6)]
    pub dist_tol: f64,
    #[arg(long, default_value_t = 1e-5)]
    pub rank_tol: f64,
    #[arg(long, default_value_t = 1e-3)]
    pub fd_step: f64,
    #[arg(long, default_value_t = 12)]
    pub max_charts: usize,
}

#[derive(Args)]
pub struct RadialArgs {
    pub input: PathBuf,
    /// Zeros of the Gelfand transform and the bounded-annihilator verdict.
    #[arg(long)]
    pub zeros: bool,
    /// The critical exponent p(α).
    #[arg(long)]
    pub pstar: bool,
    /// Residuals of α against φ_z truncated at levels 0..=N.
    #[arg(long, num_args = 3, value_names = ["Z", "N", "P"])]
    pub witness: Option<Vec<String>>,
}

#[derive(Args)]
pub struct FreeArgs {
    /// Generator list (`group fz <k>` then one word per line).
    #[arg(required_unless_present = "example2")]
    pub generators: Option<PathBuf>,
    #[arg(long)]
    pub rank: bool,
    /// Trace this word through the subgroup automaton.
    #[arg(long)]
    pub member: Option<String>,
    /// Pull back the spherical witness through θ: F_k → F_{k/2+1}.
    #[arg(long, num_args = 3, value_names = ["K", "N", "P"])]
    pub example2: Option<Vec<String>>,
    /// Print every term of γ_N.
    #[arg(long)]
    pub show_gamma: bool,
}

#[derive(Args)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Random cases per invariant.
    #[arg(long, default_value_t = 50)]
    pub cases: usize,
    /// Directory of extra fixtures to replay.
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("ZDLAB_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Input(format!("ZDLAB_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Invariant(e.to_string()))
}

fn run(cli: Cli) -> Result<Report, CliError> {
    configure_threads()?;
    match cli.command {
        Command::Convolve(a) => commands::convolve::run(&a),
        Command::Torus(a) => commands::torus::run(&a),
        Command::Radial(a) => commands::radial::run(&a),
        Command::Free(a) => commands::free::run(&a),
        Command::Selftest(a) => commands::selftest::run(&a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(report.render().as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
