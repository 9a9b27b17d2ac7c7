//! Renderers for the single-shot commands.

use relpulse::fields::{boost_fields, energy_density_ratio, FieldState};
use relpulse::kinematics::Boost;
use relpulse::pulse::{integrate_energy, MonochromaticPulse, QuadraturePlan, QuadratureRule};
use relpulse::wavecheck::{convergence_order, residual_wave_equation, Grid1D, WaveProfile};
use relpulse::ConvergenceEstimate;

use crate::config::{ensure_cli_beta, OutputFormat};
use crate::report::render_scalars;
use crate::AppError;

/// nu/nu', lambda'/lambda, and W/W' for one boost speed.
pub fn doppler_report(beta: f64, format: OutputFormat) -> Result<String, AppError> {
    ensure_cli_beta(beta)?;
    let boost = Boost::new(beta)?;
    let d = boost.doppler_factor();
    Ok(render_scalars(
        &[
            ("nu_ratio", d),
            ("lam_ratio", d),
            ("w_ratio", energy_density_ratio(&boost)),
        ],
        format,
    ))
}

/// Canonical plane-wave components before and after the boost, with the
/// numeric density ratio next to the closed form.
pub fn boost_field_report(
    beta: f64,
    amplitude: f64,
    format: OutputFormat,
) -> Result<String, AppError> {
    ensure_cli_beta(beta)?;
    if !amplitude.is_finite() || amplitude == 0.0 {
        return Err(AppError::Config(format!(
            "amplitude must be finite and nonzero, got {amplitude}"
        )));
    }
    let boost = Boost::new(beta)?;
    let base = FieldState::plane_wave(amplitude);
    let primed = boost_fields(&boost, &base);
    let numeric = base.energy_density() / primed.energy_density();
    let closed = energy_density_ratio(&boost);
    Ok(render_scalars(
        &[
            ("beta", beta),
            ("e_y", base.e.y),
            ("h_z", base.h.z),
            ("e_y_boosted", primed.e.y),
            ("h_z_boosted", primed.h.z),
            ("w_ratio_numeric", numeric),
            ("w_ratio_closed", closed),
            ("relative_error", ((numeric - closed) / closed).abs()),
        ],
        format,
    ))
}

/// Numeric pulse energy next to the closed form.
pub fn pulse_energy_report(
    amplitude: f64,
    frequency: f64,
    periods: u32,
    points_per_wavelength: u32,
    rule: QuadratureRule,
    format: OutputFormat,
) -> Result<String, AppError> {
    let pulse = MonochromaticPulse::new(amplitude, frequency, periods, 0.0)?;
    let plan = QuadraturePlan::new(points_per_wavelength, rule)?;
    let numeric = integrate_energy(&pulse, &plan);
    let closed = pulse.closed_form_energy();
    Ok(render_scalars(
        &[
            ("energy_numeric", numeric),
            ("energy_closed_form", closed),
            ("relative_error", ((numeric - closed) / closed).abs()),
        ],
        format,
    ))
}

/// Grid used by the wavecheck command and the verification suite: one
/// carrier period in x against a shorter window in t. The two spacings
/// must differ, otherwise the symmetric stencil resolves the light-like
/// profile exactly and there is no residual to converge.
pub fn wavecheck_grid(n: usize) -> Grid1D {
    Grid1D::new(0.0, std::f64::consts::TAU, n, 0.0, 1.0, n).expect("static grid is valid")
}

/// Residual and observed order for the light-like sine profile, plus the
/// non-solution control at omega = 2k.
pub fn wavecheck_report(format: OutputFormat) -> Result<String, AppError> {
    let profile = WaveProfile::new("sin", f64::sin);
    let grid = wavecheck_grid(128);
    let residual = residual_wave_equation(&profile, 1.0, 1.0, &grid)?;
    let estimate = convergence_order(&profile, 1.0, 1.0, &grid, 3)?;
    let order = match estimate {
        ConvergenceEstimate::Order(p) => p,
        ConvergenceEstimate::Saturated => f64::NAN,
    };
    let control = residual_wave_equation(&profile, 1.0, 2.0, &grid)?;
    Ok(render_scalars(
        &[
            ("light_like_residual", residual),
            ("light_like_order", order),
            ("control_residual", control),
        ],
        format,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn doppler_values_at_three_fifths() {
        let csv = doppler_report(0.6, OutputFormat::Csv).unwrap();
        let values: Vec<f64> = csv
            .lines()
            .nth(1)
            .unwrap()
            .split(',')
            .map(|v| v.parse().unwrap())
            .collect();
        assert!((values[0] - 2.0).abs() <= 1e-14);
        assert!((values[1] - 2.0).abs() <= 1e-14);
        assert!((values[2] - 4.0).abs() <= 1e-14);
    }

    #[test]
    fn doppler_rejects_luminal_speed() {
        assert!(matches!(
            doppler_report(1.0, OutputFormat::Csv),
            Err(AppError::Config(_))
        ));
    }

    #[test]
    fn boost_field_matches_closed_form() {
        let csv = boost_field_report(0.6, 1.0, OutputFormat::Csv).unwrap();
        let values: Vec<f64> = csv
            .lines()
            .nth(1)
            .unwrap()
            .split(',')
            .map(|v| v.parse().unwrap())
            .collect();
        assert!((values[3] - 0.5).abs() <= 1e-14, "boosted e_y {}", values[3]);
        assert!(values[7] <= 1e-10, "relative error {}", values[7]);
    }

    #[test]
    fn pulse_energy_default_is_exact() {
        let csv = pulse_energy_report(
            1.0,
            1.0,
            8,
            256,
            QuadratureRule::Simpson,
            OutputFormat::Csv,
        )
        .unwrap();
        let values: Vec<f64> = csv
            .lines()
            .nth(1)
            .unwrap()
            .split(',')
            .map(|v| v.parse().unwrap())
            .collect();
        assert!((values[0] - 1.0 / std::f64::consts::PI).abs() <= 1e-12);
        assert!(values[2] <= 1e-12);
    }

    #[test]
    fn wavecheck_reports_second_order() {
        let csv = wavecheck_report(OutputFormat::Csv).unwrap();
        let values: Vec<f64> = csv
            .lines()
            .nth(1)
            .unwrap()
            .split(',')
            .map(|v| v.parse().unwrap())
            .collect();
        assert!(values[0] <= 1e-3);
        assert!((1.8..=2.2).contains(&values[1]), "order {}", values[1]);
        assert!(values[2] > 1.0, "control residual {}", values[2]);
    }
}
