//! `orthoasym`: evaluate, approximate and compare the monic Legendre,
//! Hermite and Ismail polynomials from the command line.

mod commands;
mod output;

use clap::{Args, Parser, Subcommand};
use orthoasym_core::asymptotics::Region;
use orthoasym_core::numerics::Point;
use orthoasym_core::recurrence::Family;
use output::Format;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "orthoasym", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// pi_n at the given point, straight from the recurrence.
    Eval(EvalArgs),
    /// Leading-order approximant at a scaled point.
    Approx(ApproxArgs),
    /// Exact value against approximant, one row per degree.
    Compare(CompareArgs),
    /// Like compare, in parallel over degrees, with near-zero points dropped.
    Sweep(CompareArgs),
    /// Real zeros of pi_n.
    Zeros(ZerosArgs),
    /// Run a built-in verification suite.
    Check(CheckArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Starting precision in bits.
    #[arg(long, default_value_t = 256)]
    pub bits: u32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Args, Debug, Clone, Default)]
pub struct ZoneArgs {
    /// Inset of the oscillatory zone from the turning points.
    #[arg(long)]
    pub delta: Option<f64>,
    /// Minimum distance of outer points from the oscillation interval.
    #[arg(long = "delta-min")]
    pub delta_min: Option<f64>,
    /// Width of the complex strip around the oscillatory zone.
    #[arg(long)]
    pub rho: Option<f64>,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub n: u64,
    /// "re,im" with decimal parts; the argument of pi_n itself.
    #[arg(long, allow_hyphen_values = true)]
    pub point: Point,
    /// Print the exact rational value (real points only).
    #[arg(long)]
    pub exact: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct ApproxArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub region: Region,
    #[arg(long)]
    pub n: u64,
    /// "re,im": x for Legendre, the scaled y for Hermite and Ismail.
    #[arg(long, allow_hyphen_values = true)]
    pub point: Point,
    #[command(flatten)]
    pub zones: ZoneArgs,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub region: Region,
    #[arg(long, conflicts_with = "ns", required_unless_present = "ns")]
    pub n: Option<u64>,
    /// Comma-separated, strictly increasing degrees.
    #[arg(long, value_delimiter = ',')]
    pub ns: Vec<u64>,
    #[arg(long, allow_hyphen_values = true)]
    pub point: Point,
    /// Fail (exit 1) when any relative error exceeds this.
    #[arg(long)]
    pub tol: Option<f64>,
    #[command(flatten)]
    pub zones: ZoneArgs,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct ZerosArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Quadrature,
    Brackets,
    Lemma,
    Gamma,
    Matching,
    Zeros,
    All,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Replaces the suite's pass threshold.
    #[arg(long)]
    pub tol: Option<f64>,
    #[command(flatten)]
    pub common: Common,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout().lock();
    match commands::run(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("orthoasym: {e}");
            e.exit_code().into()
        }
    }
}
