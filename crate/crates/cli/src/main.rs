//! `dirac`: verification suites, packet statistics, figure data and kernels.

mod commands;
mod config;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dirac_core::packet::{figure_data, DEFAULT_AZIMUTH, DEFAULT_POLAR, DEFAULT_RADIAL};
use dirac_core::verify::VerifyConfig;

use config::{RunConfig, Triple};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] dirac_core::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Parser, Debug)]
#[command(name = "dirac", version, about = "Free Dirac field operators in momentum space")]
struct Cli {
    /// key=value file; flags take precedence.
    #[arg(long, global = true)]
    config: Option<String>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run operator-identity suites.
    Verify(VerifyArgs),
    /// Statistics of an isotropic wave packet as CSV.
    Packet(PacketArgs),
    /// Data behind the energy (1) and velocity (2) figures as CSV.
    Figures(FigureArgs),
    /// Evaluate an oscillating kernel.
    Kernel(KernelArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name or `all`.
    #[arg(long)]
    suite: Option<String>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Replaces every tolerance.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    mass: Option<f64>,
}

#[derive(Args, Debug)]
struct PacketArgs {
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    pbar: Option<f64>,
    #[arg(long)]
    mass: Option<f64>,
    #[arg(long = "theta-s")]
    theta_s: Option<f64>,
    /// Preparation point x,y,z.
    #[arg(long, allow_hyphen_values = true)]
    x0: Option<Triple>,
    #[arg(long = "grid-radial")]
    grid_radial: Option<usize>,
    #[arg(long = "grid-cos")]
    grid_cos: Option<usize>,
    #[arg(long = "grid-phi")]
    grid_phi: Option<usize>,
    /// e3, helicity or a direction nx,ny,nz.
    #[arg(long, allow_hyphen_values = true)]
    basis: Option<String>,
}

#[derive(Args, Debug)]
struct FigureArgs {
    #[arg(long)]
    which: Option<u32>,
    #[arg(long = "q-min")]
    q_min: Option<f64>,
    #[arg(long = "q-max")]
    q_max: Option<f64>,
    #[arg(long)]
    points: Option<usize>,
    /// γm of the curves.
    #[arg(long)]
    gamma: Option<f64>,
}

#[derive(Args, Debug)]
struct KernelArgs {
    #[arg(long)]
    name: Option<String>,
    /// Momentum px,py,pz.
    #[arg(long, allow_hyphen_values = true)]
    p: Option<Triple>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<f64>,
    #[arg(long)]
    mass: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    basis: Option<String>,
}

fn check_command(file: &RunConfig, name: &str) -> Result<(), CliError> {
    match file.raw("command") {
        Some(c) if c != name => Err(CliError::Config(format!("config is for `{c}`, not `{name}`"))),
        _ => Ok(()),
    }
}

/// Returns the output text and whether every check passed.
fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let file = match &cli.config {
        Some(path) => RunConfig::read(path)?,
        None => RunConfig::default(),
    };
    match cli.command {
        Command::Verify(a) => {
            check_command(&file, "verify")?;
            let suite = file.resolve("suite", a.suite, "all".to_string())?;
            let cfg = VerifyConfig {
                samples: file.resolve("samples", a.samples, 100)?,
                seed: file.resolve("seed", a.seed, 7)?,
                mass: file.resolve("mass", a.mass, 1.0)?,
                tol: file.resolve_opt("tol", a.tol)?,
            };
            commands::verify(&suite, &cfg)
        }
        Command::Packet(a) => {
            check_command(&file, "packet")?;
            let basis = file.resolve("basis", a.basis, "e3".to_string())?;
            let args = commands::PacketArgs {
                gamma: file.resolve("gamma", a.gamma, 1.0)?,
                pbar: file.resolve("pbar", a.pbar, 2.0)?,
                mass: file.resolve("mass", a.mass, 1.0)?,
                theta_s: file.resolve("theta-s", a.theta_s, 0.0)?,
                x0: file.resolve("x0", a.x0, Triple([0.0; 3]))?.0,
                grid: [
                    file.resolve("grid-radial", a.grid_radial, DEFAULT_RADIAL)?,
                    file.resolve("grid-cos", a.grid_cos, DEFAULT_POLAR)?,
                    file.resolve("grid-phi", a.grid_phi, DEFAULT_AZIMUTH)?,
                ],
                basis: commands::parse_basis(&basis)?,
            };
            Ok((commands::packet(&args)?, true))
        }
        Command::Figures(a) => {
            check_command(&file, "figures")?;
            let figure = commands::figure(file.resolve("which", a.which, 1)?)?;
            let table = figure_data(
                figure,
                file.resolve("q-min", a.q_min, 1.0)?,
                file.resolve("q-max", a.q_max, 7.0)?,
                file.resolve("points", a.points, 60)?,
                file.resolve("gamma", a.gamma, 1.0)?,
            )?;
            Ok((commands::figures(&table), true))
        }
        Command::Kernel(a) => {
            check_command(&file, "kernel")?;
            let name = file
                .resolve_opt("name", a.name)?
                .ok_or_else(|| CliError::Config("kernel needs --name".into()))?;
            let basis = file.resolve("basis", a.basis, "e3".to_string())?;
            let text = commands::kernel(
                &name,
                file.resolve("p", a.p, Triple([0.3, -0.2, 0.5]))?.0,
                file.resolve("mass", a.mass, 1.0)?,
                file.resolve("t", a.t, 0.0)?,
                commands::parse_basis(&basis)?,
            )?;
            Ok((text, true))
        }
    }
}

fn emit(path: Option<&str>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    match run(cli).and_then(|(text, ok)| emit(out.as_deref(), &text).map(|_| ok)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
