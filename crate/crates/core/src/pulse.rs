//! Finite monochromatic wave trains and numerical pulse-energy integration.
//!
//! A pulse spans exactly `n_periods` carrier wavelengths with a rectangular
//! envelope; at t = 0 its support is [0, n lambda] and it travels toward +x
//! at c = 1. Energies are per unit transverse area, integrated over one
//! simultaneity slice of the owning frame. `boosted` rewrites the pulse in
//! the frame K' moving with `beta` toward +x: the period count and carrier
//! phase are invariants, while frequency and amplitude both scale by
//! gamma (1 - beta) = 1/doppler_factor.

use std::f64::consts::{PI, TAU};

use crate::error::Error;
use crate::fields::{energy_density_ratio, FieldState};
use crate::kinematics::Boost;
use crate::summation::CompensatedSum;

/// Fraction of the final wavelength excluded by the order-probe window.
///
/// Composite rules on a uniform grid are exact (up to rounding) for the
/// rectangular pulse because the integrand is periodic over its full
/// support, which leaves no algebraic order to observe there. The probe
/// window [0, (n - 3/8) lambda] ends away from every symmetry point of the
/// squared carrier, so the same quadrature code exhibits its true order on
/// it.
pub const ORDER_PROBE_OFFSET: f64 = 3.0 / 8.0;

/// Finite wave train with the canonical (+y electric) polarization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonochromaticPulse {
    amplitude: f64,
    nu: f64,
    n_periods: u32,
    phase0: f64,
}

impl MonochromaticPulse {
    /// Builds a pulse; amplitude and frequency must be positive and finite,
    /// and the train must hold at least one full period.
    pub fn new(amplitude: f64, nu: f64, n_periods: u32, phase0: f64) -> Result<Self, Error> {
        if !amplitude.is_finite() || amplitude <= 0.0 {
            return Err(Error::InvalidPulse(format!(
                "amplitude must be positive and finite, got {amplitude}"
            )));
        }
        if !nu.is_finite() || nu <= 0.0 {
            return Err(Error::InvalidPulse(format!(
                "frequency must be positive and finite, got {nu}"
            )));
        }
        if n_periods < 1 {
            return Err(Error::InvalidPulse(
                "pulse must contain at least one period".into(),
            ));
        }
        if !phase0.is_finite() {
            return Err(Error::InvalidPulse(format!(
                "carrier phase must be finite, got {phase0}"
            )));
        }
        Ok(Self {
            amplitude,
            nu,
            n_periods,
            phase0,
        })
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn n_periods(&self) -> u32 {
        self.n_periods
    }

    pub fn phase0(&self) -> f64 {
        self.phase0
    }

    /// lambda = 1/nu in natural units.
    pub fn wavelength(&self) -> f64 {
        1.0 / self.nu
    }

    /// Support length n_periods * lambda.
    pub fn support_length(&self) -> f64 {
        self.n_periods as f64 * self.wavelength()
    }

    /// Field sample at (x, t): zero outside the support, otherwise
    /// E_y = H_z = amplitude sin(2 pi nu (x - t) + phase0).
    pub fn sample_fields(&self, x: f64, t: f64) -> FieldState {
        let u = x - t;
        if u < 0.0 || u > self.support_length() {
            return FieldState::ZERO;
        }
        FieldState::plane_wave(self.amplitude * (TAU * self.nu * u + self.phase0).sin())
    }

    /// The same pulse described in the frame K' moving with `boost.beta()`
    /// toward +x. Frequency and amplitude pick up the plane-wave factor
    /// gamma (1 - beta); the period count and carrier phase are invariant.
    pub fn boosted(&self, boost: &Boost) -> Self {
        let factor = boost.gamma() * (1.0 - boost.beta());
        Self {
            amplitude: self.amplitude * factor,
            nu: self.nu * factor,
            n_periods: self.n_periods,
            phase0: self.phase0,
        }
    }

    /// Exact total energy per unit transverse area,
    /// amplitude^2 n_periods lambda / 8 pi.
    pub fn closed_form_energy(&self) -> f64 {
        self.amplitude * self.amplitude * self.n_periods as f64 * self.wavelength() / (8.0 * PI)
    }

    /// Exact energy in [0, x_end] of the t = 0 slice, from the
    /// antiderivative of the squared carrier; `x_end` is clamped to the
    /// support.
    pub fn closed_form_energy_prefix(&self, x_end: f64) -> f64 {
        let x = x_end.clamp(0.0, self.support_length());
        let k2 = 2.0 * TAU * self.nu;
        let a2 = self.amplitude * self.amplitude;
        a2 / (8.0 * PI) * (x - ((k2 * x + 2.0 * self.phase0).sin() - (2.0 * self.phase0).sin()) / k2)
    }
}

/// Composite quadrature rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureRule {
    Midpoint,
    Simpson,
}

/// Panel density and rule for pulse-energy integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraturePlan {
    points_per_wavelength: u32,
    rule: QuadratureRule,
}

impl QuadraturePlan {
    pub const MIN_POINTS_PER_WAVELENGTH: u32 = 8;

    pub fn new(points_per_wavelength: u32, rule: QuadratureRule) -> Result<Self, Error> {
        if points_per_wavelength < Self::MIN_POINTS_PER_WAVELENGTH {
            return Err(Error::InvalidPlan(format!(
                "need at least {} points per wavelength, got {points_per_wavelength}",
                Self::MIN_POINTS_PER_WAVELENGTH
            )));
        }
        if rule == QuadratureRule::Simpson && !points_per_wavelength.is_multiple_of(2) {
            return Err(Error::InvalidPlan(format!(
                "simpson requires an even panel count per wavelength, got {points_per_wavelength}"
            )));
        }
        Ok(Self {
            points_per_wavelength,
            rule,
        })
    }

    pub fn points_per_wavelength(&self) -> u32 {
        self.points_per_wavelength
    }

    pub fn rule(&self) -> QuadratureRule {
        self.rule
    }
}

/// Simpson at 256 panels per wavelength.
impl Default for QuadraturePlan {
    fn default() -> Self {
        Self {
            points_per_wavelength: 256,
            rule: QuadratureRule::Simpson,
        }
    }
}

fn panel_count(pulse: &MonochromaticPulse, plan: &QuadraturePlan, x_end: f64) -> usize {
    let target = plan.points_per_wavelength() as f64 * pulse.nu() * x_end;
    match plan.rule() {
        QuadratureRule::Midpoint => (target.round() as usize).max(1),
        QuadratureRule::Simpson => 2 * ((target / 2.0).round() as usize).max(1),
    }
}

/// Energy per unit transverse area in [0, x_end] of the t = 0 slice,
/// integrated with the plan's composite rule at its density. Accumulation
/// is compensated, so the result is independent of evaluation order.
pub fn integrate_energy_prefix(
    pulse: &MonochromaticPulse,
    plan: &QuadraturePlan,
    x_end: f64,
) -> f64 {
    let limit = x_end.clamp(0.0, pulse.support_length());
    if limit <= 0.0 {
        return 0.0;
    }
    let n = panel_count(pulse, plan, limit);
    let h = limit / n as f64;
    let density = |x: f64| pulse.sample_fields(x, 0.0).energy_density();
    let mut acc = CompensatedSum::new();
    match plan.rule() {
        QuadratureRule::Midpoint => {
            for j in 0..n {
                acc.add(density((j as f64 + 0.5) * h));
            }
            acc.value() * h
        }
        QuadratureRule::Simpson => {
            acc.add(density(0.0));
            acc.add(density(limit));
            for j in 1..n {
                let w = if j % 2 == 1 { 4.0 } else { 2.0 };
                acc.add(w * density(j as f64 * h));
            }
            acc.value() * h / 3.0
        }
    }
}

/// Total pulse energy per unit transverse area over the full support;
/// converges to amplitude^2 n_periods lambda / 8 pi.
pub fn integrate_energy(pulse: &MonochromaticPulse, plan: &QuadraturePlan) -> f64 {
    integrate_energy_prefix(pulse, plan, pulse.support_length())
}

/// Closed-form two-frame energy ratio E/E' = (W/W')(lambda/lambda'),
/// numerically identical to the Doppler factor nu/nu'.
pub fn energy_ratio_closed_form(boost: &Boost) -> f64 {
    energy_density_ratio(boost) / boost.doppler_factor()
}

/// Numeric-vs-closed-form comparison of the two-frame pulse-energy ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioReport {
    pub numeric_ratio: f64,
    pub closed_form_ratio: f64,
    pub relative_error: f64,
}

/// Integrates the pulse in the base frame and in the boosted frame and
/// reports the numeric energy ratio next to the closed form.
pub fn verify_energy_ratio(
    boost: &Boost,
    pulse: &MonochromaticPulse,
    plan: &QuadraturePlan,
) -> RatioReport {
    let base = integrate_energy(pulse, plan);
    let boosted = integrate_energy(&pulse.boosted(boost), plan);
    let numeric_ratio = base / boosted;
    let closed_form_ratio = energy_ratio_closed_form(boost);
    RatioReport {
        numeric_ratio,
        closed_form_ratio,
        relative_error: ((numeric_ratio - closed_form_ratio) / closed_form_ratio).abs(),
    }
}

/// Relative quadrature errors of one refinement study; the plan density
/// doubles per level.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureStudy {
    pub points_per_wavelength: Vec<u32>,
    /// Errors on the probe window [0, (n - 3/8) lambda], where the rule
    /// shows its algebraic order.
    pub probe_rel_errors: Vec<f64>,
    /// Errors on the full support, which sit at the rounding floor.
    pub full_rel_errors: Vec<f64>,
}

/// Runs `levels` density doublings starting from `ppw0` and records the
/// relative error against the closed form on both the probe window and the
/// full support.
pub fn quadrature_convergence_study(
    pulse: &MonochromaticPulse,
    rule: QuadratureRule,
    ppw0: u32,
    levels: usize,
) -> Result<QuadratureStudy, Error> {
    if levels < 2 {
        return Err(Error::InvalidGrid(
            "a refinement study needs at least 2 levels".into(),
        ));
    }
    let probe_end = pulse.support_length() - ORDER_PROBE_OFFSET * pulse.wavelength();
    let probe_exact = pulse.closed_form_energy_prefix(probe_end);
    let full_exact = pulse.closed_form_energy();
    let mut study = QuadratureStudy {
        points_per_wavelength: Vec::with_capacity(levels),
        probe_rel_errors: Vec::with_capacity(levels),
        full_rel_errors: Vec::with_capacity(levels),
    };
    for level in 0..levels {
        let ppw = ppw0
            .checked_shl(level as u32)
            .ok_or_else(|| Error::InvalidGrid("refinement overflows the panel density".into()))?;
        let plan = QuadraturePlan::new(ppw, rule)?;
        let probe = integrate_energy_prefix(pulse, &plan, probe_end);
        let full = integrate_energy(pulse, &plan);
        study.points_per_wavelength.push(ppw);
        study
            .probe_rel_errors
            .push(((probe - probe_exact) / probe_exact).abs());
        study
            .full_rel_errors
            .push(((full - full_exact) / full_exact).abs());
    }
    Ok(study)
}
