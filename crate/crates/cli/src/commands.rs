//! Command definitions and dispatch.
//!
//! Exit codes: 0 success, 2 invalid density matrix, 3 parse error,
//! 4 bad family parameters, 5 I/O failure.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use qbell_core::bell::{self, OptimizerConfig};
use qbell_core::error::Error as CoreError;
use qbell_core::states::{self, MemsLikeParams, MemsParams, WernerLikeParams};
use qbell_core::sweep;
use qbell_core::{measures, DensityMatrix};

use crate::output;
use crate::statefile;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid density matrix: {0}")]
    InvalidState(CoreError),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::InvalidState(_) => 2,
            CliError::Parse(_) => 3,
            CliError::BadParams(_) => 4,
            CliError::Io(_) => 5,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::ParamOutOfRange { .. } => CliError::BadParams(e.to_string()),
            other => CliError::InvalidState(other),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "qbell",
    about = "Two-qubit entanglement measures and maximal CHSH violations",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report entanglement measures and the maximal Bell violation of one state.
    Analyze(AnalyzeArgs),
    /// Tabulate maximal violation versus tangle for three state families (CSV).
    Fig1(Fig1Args),
    /// Trace the B_S = 2 boundary in the tangle-linear-entropy plane (CSV).
    Fig2(Fig2Args),
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("input").required(true).args(["state", "family"]))]
pub struct AnalyzeArgs {
    /// Path to a DM4 state file.
    #[arg(long)]
    pub state: Option<PathBuf>,
    /// State family: pure, werner, werner-like, mems, mems-like.
    #[arg(long)]
    pub family: Option<String>,
    /// Mixing weight gamma in [0, 1].
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Entanglement angle xi in [0, pi/2]; defaults to pi/4.
    #[arg(long)]
    pub xi: Option<f64>,
    /// Relative phase phi in [0, 2*pi); defaults to 0.
    #[arg(long)]
    pub phi: Option<f64>,
    /// Seed for the numeric optimizer.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct Fig1Args {
    /// Samples per curve.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    /// Output CSV path.
    #[arg(long)]
    pub out: PathBuf,
    /// Seed for the numeric cross-checks.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct Fig2Args {
    /// Grid points per curve.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    /// Output CSV path.
    #[arg(long)]
    pub out: PathBuf,
}

/// Parse the command line and run it. Usage errors exit through clap.
pub fn run() -> Result<(), CliError> {
    dispatch(Cli::parse())
}

pub fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze(args) => analyze(args),
        Command::Fig1(args) => fig1(args),
        Command::Fig2(args) => fig2(args),
    }
}

fn reject_extra(
    family: &str,
    xi: Option<f64>,
    phi: Option<f64>,
    gamma: Option<f64>,
    takes_gamma: bool,
    takes_angles: bool,
) -> Result<(), CliError> {
    if !takes_angles && (xi.is_some() || phi.is_some()) {
        return Err(CliError::BadParams(format!(
            "family '{family}' does not take --xi/--phi"
        )));
    }
    if !takes_gamma && gamma.is_some() {
        return Err(CliError::BadParams(format!(
            "family '{family}' does not take --gamma"
        )));
    }
    if takes_gamma && gamma.is_none() {
        return Err(CliError::BadParams(format!(
            "family '{family}' requires --gamma"
        )));
    }
    Ok(())
}

/// Build the state named on the command line, plus a one-line description
/// for the report header.
pub fn family_state(
    family: &str,
    gamma: Option<f64>,
    xi: Option<f64>,
    phi: Option<f64>,
) -> Result<(DensityMatrix, String), CliError> {
    let xi_v = xi.unwrap_or(std::f64::consts::FRAC_PI_4);
    let phi_v = phi.unwrap_or(0.0);
    match family {
        "pure" => {
            reject_extra(family, xi, phi, gamma, false, true)?;
            let p = WernerLikeParams::new(1.0, xi_v, phi_v)?;
            Ok((
                states::werner_like(&p),
                format!("family=pure xi={xi_v} phi={phi_v}"),
            ))
        }
        "werner" => {
            reject_extra(family, xi, phi, gamma, true, false)?;
            let g = gamma.expect("checked");
            Ok((states::werner(g)?, format!("family=werner gamma={g}")))
        }
        "werner-like" => {
            reject_extra(family, xi, phi, gamma, true, true)?;
            let g = gamma.expect("checked");
            let p = WernerLikeParams::new(g, xi_v, phi_v)?;
            Ok((
                states::werner_like(&p),
                format!("family=werner-like gamma={g} xi={xi_v} phi={phi_v}"),
            ))
        }
        "mems" => {
            reject_extra(family, xi, phi, gamma, true, false)?;
            let g = gamma.expect("checked");
            let p = MemsParams::new(g)?;
            Ok((states::mems(&p), format!("family=mems gamma={g}")))
        }
        "mems-like" => {
            reject_extra(family, xi, phi, gamma, true, true)?;
            let g = gamma.expect("checked");
            let p = MemsLikeParams::new(g, xi_v, phi_v)?;
            Ok((
                states::mems_like(&p),
                format!("family=mems-like gamma={g} xi={xi_v} phi={phi_v}"),
            ))
        }
        other => Err(CliError::BadParams(format!("unknown family '{other}'"))),
    }
}

fn analyze(args: AnalyzeArgs) -> Result<(), CliError> {
    let (rho, source) = if let Some(path) = &args.state {
        let parsed = statefile::read_dm4(path)?.map_err(|e| CliError::Parse(e.to_string()))?;
        let rho = DensityMatrix::new(parsed).map_err(CliError::InvalidState)?;
        (rho, format!("file={}", path.display()))
    } else {
        let family = args.family.as_deref().expect("clap group guarantees one");
        family_state(family, args.gamma, args.xi, args.phi)?
    };

    let report = measures::report(&rho)?;
    let analytic = bell::chsh_max_analytic(&rho)?;
    let cfg = OptimizerConfig {
        seed: args.seed,
        ..OptimizerConfig::default()
    };
    let numeric = bell::chsh_max_numeric(&rho, &cfg)?;

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    output::write_report(&mut out, &source, args.seed, &report, &analytic, &numeric)?;
    Ok(())
}

fn fig1(args: Fig1Args) -> Result<(), CliError> {
    let cfg = OptimizerConfig {
        seed: args.seed,
        ..OptimizerConfig::default()
    };
    let records = sweep::fig1_sweep(args.samples, &cfg)?;
    let mut w = BufWriter::new(File::create(&args.out)?);
    output::write_fig1_csv(&mut w, &records)?;
    w.flush()?;
    Ok(())
}

fn fig2(args: Fig2Args) -> Result<(), CliError> {
    let result = sweep::fig2_boundary(args.samples)?;
    for s in &result.skipped {
        eprintln!("fig2: no boundary crossing for {} at xi={}", s.family, s.xi);
    }
    let mut w = BufWriter::new(File::create(&args.out)?);
    output::write_fig2_csv(&mut w, &result.records)?;
    w.flush()?;
    Ok(())
}
