//! Sweep configuration with flag > config-file > default precedence.
//!
//! The config file is a flat key = value text format; `#` starts a comment
//! and blank lines are ignored. Recognized keys: betas, amplitude,
//! frequency, periods, points_per_wavelength, rule, h0, tolerance, format,
//! output. Unknown keys are rejected so typos surface immediately.

use std::path::{Path, PathBuf};

use relpulse::QuadratureRule;

use crate::AppError;

/// Speed cap on every CLI-facing beta; the library itself accepts any
/// |beta| < 1, but the density ratio is singular toward the light speed.
pub const MAX_CLI_BETA: f64 = 0.999999;

/// Default carrier amplitude 4 sqrt(2 pi). The default lab pulse (unit
/// frequency, 8 periods) then carries energy exactly 32 in natural units,
/// so the default photon seeding count = round(32 / h0) is integral for
/// h0 = 1 and the recovered slope is exact rather than rounded.
pub fn default_amplitude() -> f64 {
    4.0 * (2.0 * std::f64::consts::PI).sqrt()
}

pub const DEFAULT_FREQUENCY: f64 = 1.0;
pub const DEFAULT_PERIODS: u32 = 8;
pub const DEFAULT_POINTS_PER_WAVELENGTH: u32 = 256;
pub const DEFAULT_RULE: QuadratureRule = QuadratureRule::Simpson;
pub const DEFAULT_H0: f64 = 1.0;
pub const DEFAULT_TOLERANCE: f64 = 1e-6;
pub const DEFAULT_BETAS: [f64; 5] = [0.0, 0.2, 0.4, 0.6, 0.8];

/// Output encodings for machine-readable reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<Self, AppError> {
        match s.trim() {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(AppError::Config(format!(
                "unknown format '{other}' (expected csv or json)"
            ))),
        }
    }
}

pub fn parse_rule(s: &str) -> Result<QuadratureRule, AppError> {
    match s.trim() {
        "midpoint" => Ok(QuadratureRule::Midpoint),
        "simpson" => Ok(QuadratureRule::Simpson),
        other => Err(AppError::Config(format!(
            "unknown rule '{other}' (expected midpoint or simpson)"
        ))),
    }
}

/// Comma-separated beta list.
pub fn parse_betas(s: &str) -> Result<Vec<f64>, AppError> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<f64>()
                .map_err(|_| AppError::Config(format!("invalid beta '{}'", tok.trim())))
        })
        .collect()
}

pub fn ensure_cli_beta(beta: f64) -> Result<(), AppError> {
    if !beta.is_finite() || beta.abs() > MAX_CLI_BETA {
        return Err(AppError::Config(format!(
            "beta must be finite with |beta| <= {MAX_CLI_BETA}, got {beta}"
        )));
    }
    Ok(())
}

/// Fully resolved sweep configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub betas: Vec<f64>,
    pub amplitude: f64,
    pub frequency: f64,
    pub periods: u32,
    pub points_per_wavelength: u32,
    pub rule: QuadratureRule,
    pub h0: f64,
    pub tolerance: f64,
    pub format: OutputFormat,
    pub output: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            betas: DEFAULT_BETAS.to_vec(),
            amplitude: default_amplitude(),
            frequency: DEFAULT_FREQUENCY,
            periods: DEFAULT_PERIODS,
            points_per_wavelength: DEFAULT_POINTS_PER_WAVELENGTH,
            rule: DEFAULT_RULE,
            h0: DEFAULT_H0,
            tolerance: DEFAULT_TOLERANCE,
            format: OutputFormat::Csv,
            output: None,
        }
    }
}

/// Partially specified configuration; used to layer flags over file values
/// over defaults.
#[derive(Debug, Clone, Default)]
pub struct PartialConfig {
    pub betas: Option<Vec<f64>>,
    pub amplitude: Option<f64>,
    pub frequency: Option<f64>,
    pub periods: Option<u32>,
    pub points_per_wavelength: Option<u32>,
    pub rule: Option<QuadratureRule>,
    pub h0: Option<f64>,
    pub tolerance: Option<f64>,
    pub format: Option<OutputFormat>,
    pub output: Option<PathBuf>,
}

impl PartialConfig {
    /// Fields set in `self` win over `fallback`.
    pub fn layered_over(self, fallback: PartialConfig) -> PartialConfig {
        PartialConfig {
            betas: self.betas.or(fallback.betas),
            amplitude: self.amplitude.or(fallback.amplitude),
            frequency: self.frequency.or(fallback.frequency),
            periods: self.periods.or(fallback.periods),
            points_per_wavelength: self.points_per_wavelength.or(fallback.points_per_wavelength),
            rule: self.rule.or(fallback.rule),
            h0: self.h0.or(fallback.h0),
            tolerance: self.tolerance.or(fallback.tolerance),
            format: self.format.or(fallback.format),
            output: self.output.or(fallback.output),
        }
    }

    /// Reads a flat key = value config file.
    pub fn from_file(path: &Path) -> Result<PartialConfig, AppError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| AppError::Io(format!("cannot read {}: {e}", path.display())))?;
        let mut cfg = PartialConfig::default();
        for (line_no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                AppError::Config(format!(
                    "{}:{}: expected key = value, got '{raw}'",
                    path.display(),
                    line_no + 1
                ))
            })?;
            let key = key.trim();
            let value = value.trim();
            let bad_number = |what: &str| {
                AppError::Config(format!(
                    "{}:{}: invalid {what} '{value}'",
                    path.display(),
                    line_no + 1
                ))
            };
            match key {
                "betas" => cfg.betas = Some(parse_betas(value)?),
                "amplitude" => {
                    cfg.amplitude = Some(value.parse().map_err(|_| bad_number("amplitude"))?)
                }
                "frequency" => {
                    cfg.frequency = Some(value.parse().map_err(|_| bad_number("frequency"))?)
                }
                "periods" => cfg.periods = Some(value.parse().map_err(|_| bad_number("periods"))?),
                "points_per_wavelength" => {
                    cfg.points_per_wavelength =
                        Some(value.parse().map_err(|_| bad_number("panel count"))?)
                }
                "rule" => cfg.rule = Some(parse_rule(value)?),
                "h0" => cfg.h0 = Some(value.parse().map_err(|_| bad_number("h0"))?),
                "tolerance" => {
                    cfg.tolerance = Some(value.parse().map_err(|_| bad_number("tolerance"))?)
                }
                "format" => cfg.format = Some(OutputFormat::parse(value)?),
                "output" => cfg.output = Some(PathBuf::from(value)),
                other => {
                    return Err(AppError::Config(format!(
                        "{}:{}: unknown key '{other}'",
                        path.display(),
                        line_no + 1
                    )))
                }
            }
        }
        Ok(cfg)
    }

    /// Fills the remaining fields from defaults and validates the result.
    pub fn resolve(self) -> Result<SweepConfig, AppError> {
        let defaults = SweepConfig::default();
        let cfg = SweepConfig {
            betas: self.betas.unwrap_or(defaults.betas),
            amplitude: self.amplitude.unwrap_or(defaults.amplitude),
            frequency: self.frequency.unwrap_or(defaults.frequency),
            periods: self.periods.unwrap_or(defaults.periods),
            points_per_wavelength: self
                .points_per_wavelength
                .unwrap_or(defaults.points_per_wavelength),
            rule: self.rule.unwrap_or(defaults.rule),
            h0: self.h0.unwrap_or(defaults.h0),
            tolerance: self.tolerance.unwrap_or(defaults.tolerance),
            format: self.format.unwrap_or(defaults.format),
            output: self.output,
        };
        if cfg.betas.is_empty() {
            return Err(AppError::Config("beta list must not be empty".into()));
        }
        for beta in &cfg.betas {
            ensure_cli_beta(*beta)?;
        }
        if !cfg.tolerance.is_finite() || cfg.tolerance <= 0.0 {
            return Err(AppError::Config(format!(
                "tolerance must be positive and finite, got {}",
                cfg.tolerance
            )));
        }
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_resolves() {
        let cfg = PartialConfig::default().resolve().unwrap();
        assert_eq!(cfg.betas, DEFAULT_BETAS.to_vec());
        assert_eq!(cfg.periods, 8);
        assert_eq!(cfg.rule, QuadratureRule::Simpson);
    }

    #[test]
    fn betas_parse_and_reject() {
        assert_eq!(parse_betas("0, 0.2,-0.6").unwrap(), vec![0.0, 0.2, -0.6]);
        assert!(parse_betas("0,abc").is_err());
    }

    #[test]
    fn beta_cap_is_enforced() {
        assert!(ensure_cli_beta(0.999999).is_ok());
        assert!(ensure_cli_beta(0.9999995).is_err());
        assert!(ensure_cli_beta(f64::NAN).is_err());
    }

    #[test]
    fn empty_beta_list_is_rejected() {
        let partial = PartialConfig {
            betas: Some(vec![]),
            ..Default::default()
        };
        assert!(partial.resolve().is_err());
    }

    #[test]
    fn flags_override_file_values() {
        let flags = PartialConfig {
            amplitude: Some(2.0),
            ..Default::default()
        };
        let file = PartialConfig {
            amplitude: Some(5.0),
            periods: Some(4),
            ..Default::default()
        };
        let cfg = flags.layered_over(file).resolve().unwrap();
        assert_eq!(cfg.amplitude, 2.0);
        assert_eq!(cfg.periods, 4);
    }
}
