use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ybgate_core::{Complex64, Sign};

#[derive(Debug, Parser)]
#[command(
    name = "ybgate",
    version,
    about = "Verify, build and sweep unitary Yang-Baxter gates"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check an identity over a parameter grid.
    Verify(VerifyArgs),
    /// Print one matrix as a JSON document.
    Matrix(MatrixArgs),
    /// Build CNOT from one of the gate routes and compare.
    Synthesize(SynthesizeArgs),
    /// Tabulate a quantity along one parameter.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Relation {
    Braid,
    Qybe,
    Unitarity,
    Schrodinger,
    Exponential,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "b")]
    B,
    #[value(name = "bphi")]
    BPhi,
    #[value(name = "Rx", alias = "rx")]
    Rx,
    #[value(name = "Rtheta", alias = "rtheta")]
    RTheta,
    #[value(name = "H", alias = "h")]
    H,
    #[value(name = "Hx", alias = "hx")]
    Hx,
    #[value(name = "U", alias = "u")]
    U,
    #[value(name = "cnot")]
    Cnot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Theorem1,
    Evolution,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Concurrence,
    Unitarity,
    Braid,
    Qybe,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Param {
    Theta,
    X,
    Phi,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct VerifyArgs {
    pub relation: Relation,
    /// Restrict to one family; both when omitted.
    #[arg(long, value_parser = parse_sign)]
    pub sign: Option<Sign>,
    /// Number of φ values, evenly spaced on [0, 2π).
    #[arg(long, default_value_t = 8)]
    pub phi_grid: usize,
    /// Points along the spectral parameter.
    #[arg(long)]
    pub grid: Option<usize>,
    #[arg(long)]
    pub tol: Option<f64>,
    /// Check a matrix from a file instead (braid and unitarity only).
    #[arg(long)]
    pub matrix_file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct MatrixArgs {
    pub family: Family,
    #[arg(long, value_parser = parse_sign, default_value = "+")]
    pub sign: Sign,
    #[arg(long)]
    pub phi: Option<f64>,
    #[arg(long)]
    pub theta: Option<f64>,
    #[arg(long)]
    pub x: Option<f64>,
    /// Deformation `re,im` (or a bare real).
    #[arg(long, value_parser = parse_complex)]
    pub q: Option<Complex64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SynthesizeArgs {
    pub route: Route,
    #[arg(long, default_value_t = 0.0)]
    pub phi: f64,
    /// Evolution angle; CNOT needs π/2.
    #[arg(long)]
    pub theta: Option<f64>,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SweepArgs {
    pub quantity: Quantity,
    #[arg(long, value_enum, default_value_t = Param::Theta)]
    pub param: Param,
    #[arg(long)]
    pub from: f64,
    #[arg(long)]
    pub to: f64,
    #[arg(long)]
    pub steps: usize,
    #[arg(long, value_parser = parse_sign)]
    pub sign: Option<Sign>,
    #[arg(long)]
    pub phi: Option<f64>,
    #[arg(long)]
    pub theta: Option<f64>,
    #[arg(long)]
    pub x: Option<f64>,
    /// Second spectral parameter for the qybe sweep.
    #[arg(long, default_value_t = 0.5)]
    pub y: f64,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    s.parse().map_err(|e| format!("{e}"))
}

/// `re,im` or `re`.
fn parse_complex(s: &str) -> Result<Complex64, String> {
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("'{t}': {e}"));
    match s.split_once(',') {
        Some((re, im)) => Ok(Complex64::new(num(re)?, num(im)?)),
        None => Ok(Complex64::new(num(s)?, 0.0)),
    }
}
