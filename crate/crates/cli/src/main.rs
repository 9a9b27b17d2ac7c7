//! Command-line front end. Exit codes: 0 success, 1 verification failure,
//! 2 usage or configuration error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use relpulse::QuadratureRule;
use relpulse_cli::config::{OutputFormat, PartialConfig};
use relpulse_cli::{commands, config, pipeline, verify, AppError};

#[derive(Parser)]
#[command(
    name = "relpulse",
    version,
    about = "Frame sweeps and invariant checks for collinear light pulses (natural units, c = 1)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Self::Csv,
            FormatArg::Json => Self::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    Midpoint,
    Simpson,
}

impl From<RuleArg> for QuadratureRule {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::Midpoint => Self::Midpoint,
            RuleArg::Simpson => Self::Simpson,
        }
    }
}

/// Flags shared by `sweep` and `fit`; every field is optional so values can
/// fall back to the config file and then to the built-in defaults.
#[derive(clap::Args)]
struct SweepArgs {
    /// Comma-separated boost speeds, e.g. 0,0.2,0.4
    #[arg(long)]
    betas: Option<String>,
    #[arg(long)]
    amplitude: Option<f64>,
    #[arg(long)]
    frequency: Option<f64>,
    #[arg(long)]
    periods: Option<u32>,
    #[arg(long)]
    points_per_wavelength: Option<u32>,
    #[arg(long, value_enum)]
    rule: Option<RuleArg>,
    /// Reference constant used to seed the photon count
    #[arg(long)]
    h0: Option<f64>,
    /// Relative tolerance for the summary pass/fail verdicts
    #[arg(long)]
    tolerance: Option<f64>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Write the report here instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
    /// Flat key = value config file; flags override file values
    #[arg(long)]
    config: Option<PathBuf>,
}

impl SweepArgs {
    fn resolve(self) -> Result<config::SweepConfig, AppError> {
        let betas = self.betas.as_deref().map(config::parse_betas).transpose()?;
        let flags = PartialConfig {
            betas,
            amplitude: self.amplitude,
            frequency: self.frequency,
            periods: self.periods,
            points_per_wavelength: self.points_per_wavelength,
            rule: self.rule.map(Into::into),
            h0: self.h0,
            tolerance: self.tolerance,
            format: self.format.map(Into::into),
            output: self.output,
        };
        let layered = match &self.config {
            Some(path) => flags.layered_over(PartialConfig::from_file(path)?),
            None => flags,
        };
        layered.resolve()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print nu/nu', lambda'/lambda, and W/W' for one boost speed
    Doppler {
        #[arg(long)]
        beta: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Transform the canonical plane wave and report the density ratio
    BoostField {
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value_t = 1.0)]
        amplitude: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Integrate one pulse's energy and compare with the closed form
    PulseEnergy {
        #[arg(long, default_value_t = 1.0)]
        amplitude: f64,
        #[arg(long, default_value_t = config::DEFAULT_FREQUENCY)]
        frequency: f64,
        #[arg(long, default_value_t = config::DEFAULT_PERIODS)]
        periods: u32,
        #[arg(long, default_value_t = config::DEFAULT_POINTS_PER_WAVELENGTH)]
        points_per_wavelength: u32,
        #[arg(long, value_enum, default_value = "simpson")]
        rule: RuleArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the frame sweep and emit the full report
    Sweep(SweepArgs),
    /// Run the frame sweep and report only the fitted slope
    Fit(SweepArgs),
    /// Wave-equation residual and convergence summary
    Wavecheck {
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the full invariant suite; nonzero exit on any failure
    Verify,
}

enum Outcome {
    Clean,
    VerificationFailed,
}

fn emit(payload: &str, output: Option<&PathBuf>) -> Result<(), AppError> {
    match output {
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| AppError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            std::io::stdout()
                .write_all(payload.as_bytes())
                .map_err(|e| AppError::Io(e.to_string()))?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, AppError> {
    match cli.command {
        Command::Doppler {
            beta,
            format,
            output,
        } => {
            let payload = commands::doppler_report(beta, format.into())?;
            emit(&payload, output.as_ref())?;
            Ok(Outcome::Clean)
        }
        Command::BoostField {
            beta,
            amplitude,
            format,
            output,
        } => {
            let payload = commands::boost_field_report(beta, amplitude, format.into())?;
            emit(&payload, output.as_ref())?;
            Ok(Outcome::Clean)
        }
        Command::PulseEnergy {
            amplitude,
            frequency,
            periods,
            points_per_wavelength,
            rule,
            format,
            output,
        } => {
            let payload = commands::pulse_energy_report(
                amplitude,
                frequency,
                periods,
                points_per_wavelength,
                rule.into(),
                format.into(),
            )?;
            emit(&payload, output.as_ref())?;
            Ok(Outcome::Clean)
        }
        Command::Sweep(args) => {
            let cfg = args.resolve()?;
            let report = pipeline::run_sweep(&cfg)?;
            emit(&report.render(cfg.format), cfg.output.as_ref())?;
            if report.summary.pass {
                Ok(Outcome::Clean)
            } else {
                eprintln!("sweep: invariant checks failed (see report summary)");
                Ok(Outcome::VerificationFailed)
            }
        }
        Command::Fit(args) => {
            let cfg = args.resolve()?;
            let fit = pipeline::run_fit(&cfg)?;
            let payload = relpulse_cli::report::render_scalars(
                &[
                    ("h_est", fit.h_est),
                    ("max_rel_residual", fit.max_rel_residual),
                    ("n_samples", fit.n_samples as f64),
                ],
                cfg.format,
            );
            emit(&payload, cfg.output.as_ref())?;
            Ok(Outcome::Clean)
        }
        Command::Wavecheck { format, output } => {
            let payload = commands::wavecheck_report(format.into())?;
            emit(&payload, output.as_ref())?;
            Ok(Outcome::Clean)
        }
        Command::Verify => {
            let suites = verify::run_all();
            print!("{}", verify::render_text(&suites));
            if verify::all_pass(&suites) {
                Ok(Outcome::Clean)
            } else {
                Ok(Outcome::VerificationFailed)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
