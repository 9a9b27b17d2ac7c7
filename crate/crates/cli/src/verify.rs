//! The `verify` command: every module's invariants checked at fixed,
//! documented grids. No randomness; two runs produce identical results.

use relpulse::convergence::estimate_order;
use relpulse::duality::{
    fit_planck_constant, parallel_null_check, transform_ensemble, FrequencyEnergySample,
    PhotonEnsemble,
};
use relpulse::fields::{boost_fields, energy_density_ratio, FieldState, Vec3};
use relpulse::kinematics::{Boost, FourVector};
use relpulse::pulse::{
    integrate_energy, quadrature_convergence_study, verify_energy_ratio, MonochromaticPulse,
    QuadraturePlan, QuadratureRule,
};
use relpulse::wavecheck::{convergence_order, residual_wave_equation, WaveProfile};
use relpulse::ConvergenceEstimate;

use crate::commands::wavecheck_grid;
use crate::config::default_amplitude;
use crate::numfmt::fmt_human;

/// Boost-speed grid shared by the suites.
pub const BETA_GRID: [f64; 9] = [-0.99, -0.8, -0.6, -0.2, 0.0, 0.2, 0.6, 0.8, 0.99];

/// One named check with its verdict and a short numeric detail.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn bound(name: &'static str, value: f64, bound: f64) -> Self {
        Self {
            name,
            pass: value <= bound,
            detail: format!("{} <= {}", fmt_human(value), fmt_human(bound)),
        }
    }

    fn window(name: &'static str, value: f64, lo: f64, hi: f64) -> Self {
        Self {
            name,
            pass: (lo..=hi).contains(&value),
            detail: format!("{} in [{}, {}]", fmt_human(value), fmt_human(lo), fmt_human(hi)),
        }
    }
}

/// One module's worth of checks.
#[derive(Debug, Clone)]
pub struct Suite {
    pub name: &'static str,
    pub checks: Vec<Check>,
}

impl Suite {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn four_vector_deck() -> Vec<FourVector> {
    vec![
        FourVector::new(1.0, 1.0, 0.0, 0.0),
        FourVector::new(1.0, 0.0, 0.0, 0.0),
        FourVector::new(2.0, -1.0, 0.5, 0.25),
        FourVector::new(0.3, 1.2, -0.7, 2.0),
        FourVector::new(1e3, -1e3, 500.0, 1.0),
        FourVector::new(-4.0, 2.5, 0.0, -3.0),
    ]
}

fn field_deck() -> Vec<FieldState> {
    vec![
        FieldState::plane_wave(1.0),
        FieldState::plane_wave(-17.3),
        FieldState::new(Vec3::new(0.3, -1.2, 2.0), Vec3::new(-0.7, 0.4, 1.1)),
        FieldState::new(Vec3::new(1e3, 0.0, -500.0), Vec3::new(0.0, 750.0, 1e3)),
    ]
}

fn kinematics_suite() -> Suite {
    let mut worst_square = 0.0_f64;
    let mut worst_round_trip = 0.0_f64;
    let mut worst_reciprocity = 0.0_f64;
    let mut blue_shift_ok = true;
    for beta in BETA_GRID {
        let boost = Boost::new(beta).expect("grid betas are valid");
        let g2 = boost.gamma() * boost.gamma();
        for v in four_vector_deck() {
            let boosted = boost.four_vector(&v);
            let scale = (g2 * v.magnitude_squared()).max(1.0);
            worst_square = worst_square
                .max((v.minkowski_square() - boosted.minkowski_square()).abs() / scale);
            let back = boost.inverse().four_vector(&boosted);
            let comp_scale = v.magnitude_squared().sqrt().max(1.0);
            for (a, b) in [
                (back.t(), v.t()),
                (back.x(), v.x()),
                (back.y(), v.y()),
                (back.z(), v.z()),
            ] {
                worst_round_trip = worst_round_trip.max((a - b).abs() / comp_scale);
            }
        }
        let forward = boost.doppler_factor();
        let backward = boost.inverse().doppler_factor();
        worst_reciprocity = worst_reciprocity.max((forward * backward - 1.0).abs());
        if beta > 0.0 && forward <= 1.0 {
            blue_shift_ok = false;
        }
    }
    Suite {
        name: "kinematics",
        checks: vec![
            Check::bound("minkowski_square_invariant", worst_square, 1e-9),
            Check::bound("boost_round_trip", worst_round_trip, 1e-10),
            Check::bound("doppler_reciprocity", worst_reciprocity, 1e-12),
            Check {
                name: "doppler_blue_shift",
                pass: blue_shift_ok,
                detail: "nu/nu' > 1 for beta > 0".into(),
            },
        ],
    }
}

fn fields_suite() -> Suite {
    let mut worst_invariant = 0.0_f64;
    let mut worst_brute_force = 0.0_f64;
    let mut worst_doppler_sq = 0.0_f64;
    for beta in BETA_GRID {
        let boost = Boost::new(beta).expect("grid betas are valid");
        let g2 = boost.gamma() * boost.gamma();
        for f in field_deck() {
            let g = boost_fields(&boost, &f);
            let scale = (g2 * (f.e.norm_squared() + f.h.norm_squared())).max(1.0);
            let d_base = f.e.norm_squared() - f.h.norm_squared();
            let d_boosted = g.e.norm_squared() - g.h.norm_squared();
            worst_invariant = worst_invariant.max((d_base - d_boosted).abs() / scale);
            worst_invariant =
                worst_invariant.max((f.e.dot(&f.h) - g.e.dot(&g.h)).abs() / scale);
        }
        for amplitude in [1e-3, 0.5, 1.0, 17.3, 1e3] {
            let f = FieldState::plane_wave(amplitude);
            let primed = boost_fields(&Boost::new(-beta).expect("grid betas are valid"), &f);
            let brute = primed.energy_density() / f.energy_density();
            let closed = energy_density_ratio(&boost);
            worst_brute_force = worst_brute_force.max(((brute - closed) / closed).abs());
        }
        let d = boost.doppler_factor();
        worst_doppler_sq =
            worst_doppler_sq.max(((energy_density_ratio(&boost) - d * d) / (d * d)).abs());
    }
    Suite {
        name: "fields",
        checks: vec![
            Check::bound("lorentz_invariants", worst_invariant, 1e-9),
            Check::bound("density_ratio_brute_force", worst_brute_force, 1e-10),
            Check::bound("density_ratio_doppler_squared", worst_doppler_sq, 1e-12),
        ],
    }
}

fn pulse_suite() -> Suite {
    let plan = QuadraturePlan::default();
    let mut worst_ratio = 0.0_f64;
    for beta in BETA_GRID {
        let boost = Boost::new(beta).expect("grid betas are valid");
        for n in [1, 2, 8, 64] {
            let pulse = MonochromaticPulse::new(1.0, 1.0, n, 0.0).expect("static pulse");
            worst_ratio = worst_ratio.max(verify_energy_ratio(&boost, &pulse, &plan).relative_error);
        }
    }

    let mut worst_shape = 0.0_f64;
    for beta in [0.6, 0.99] {
        let boost = Boost::new(beta).expect("static beta");
        let reference = verify_energy_ratio(
            &boost,
            &MonochromaticPulse::new(1.0, 1.0, 1, 0.0).expect("static pulse"),
            &plan,
        )
        .numeric_ratio;
        for n in [8, 64] {
            for phase in [0.0, 1.234] {
                let pulse = MonochromaticPulse::new(1.0, 1.0, n, phase).expect("static pulse");
                let ratio = verify_energy_ratio(&boost, &pulse, &plan).numeric_ratio;
                worst_shape = worst_shape.max(((ratio - reference) / reference).abs());
            }
        }
    }

    let mut energy_positive = true;
    for amplitude in [1e-3, 1.0, 1e3] {
        let pulse = MonochromaticPulse::new(amplitude, 1.0, 4, 0.5).expect("static pulse");
        if integrate_energy(&pulse, &plan) <= 0.0 {
            energy_positive = false;
        }
    }

    let study = quadrature_convergence_study(
        &MonochromaticPulse::new(1.0, 1.0, 8, 0.0).expect("static pulse"),
        QuadratureRule::Simpson,
        16,
        4,
    )
    .expect("static study parameters");
    let order = match estimate_order(&study.probe_rel_errors, 1e-13) {
        ConvergenceEstimate::Order(p) => p,
        ConvergenceEstimate::Saturated => f64::NAN,
    };
    let worst_full = study.full_rel_errors.iter().copied().fold(0.0_f64, f64::max);

    Suite {
        name: "pulse",
        checks: vec![
            Check::bound("energy_ratio_vs_closed_form", worst_ratio, 1e-6),
            Check::bound("ratio_shape_independence", worst_shape, 1e-6),
            Check {
                name: "energy_positivity",
                pass: energy_positive,
                detail: "energy > 0 for amplitude > 0".into(),
            },
            Check::window("simpson_probe_order", order, 3.5, 4.5),
            Check::bound("full_support_exactness", worst_full, 1e-12),
        ],
    }
}

fn duality_suite() -> Suite {
    let plan = QuadraturePlan::default();
    let pulse = MonochromaticPulse::new(default_amplitude(), 1.0, 8, 0.0).expect("static pulse");
    let lab_energy = integrate_energy(&pulse, &plan);
    let sweep_betas = [0.0, 0.2, 0.4, 0.6, 0.8];

    let mut checks = Vec::new();
    for (name, h0) in [
        ("h_recovery_unit_seed", 1.0),
        ("h_recovery_planck_scale_seed", 6.62607015e-27),
    ] {
        let seed = PhotonEnsemble::seeded(lab_energy, pulse.nu(), h0).expect("valid seed");
        let samples: Vec<_> = sweep_betas
            .iter()
            .map(|beta| {
                let boost = Boost::new(*beta).expect("static beta");
                let ens = transform_ensemble(&boost, &seed, &pulse, &plan).expect("same pulse");
                FrequencyEnergySample::from_ensemble(&ens, *beta).expect("positive sample")
            })
            .collect();
        let fit = fit_planck_constant(&samples).expect("distinct frequencies");
        let h_error = ((fit.h_est - h0) / h0).abs();
        checks.push(Check::bound(name, h_error.max(fit.max_rel_residual), 1e-6));
    }

    let seed = PhotonEnsemble::seeded(lab_energy, pulse.nu(), 1.0).expect("valid seed");
    let mut count_ok = true;
    let mut frames = vec![seed];
    for beta in BETA_GRID {
        let boost = Boost::new(beta).expect("grid betas are valid");
        let ens = transform_ensemble(&boost, &seed, &pulse, &plan).expect("same pulse");
        if ens.count() != seed.count() {
            count_ok = false;
        }
        frames.push(ens);
    }
    checks.push(Check {
        name: "count_invariance",
        pass: count_ok,
        detail: "count copied across every frame".into(),
    });

    let mut worst_transitivity = 0.0_f64;
    let energies: Vec<f64> = frames.iter().map(|f| f.total_energy()).collect();
    for window in energies.windows(3) {
        let chained = (window[0] / window[1]) * (window[1] / window[2]);
        let direct = window[0] / window[2];
        worst_transitivity = worst_transitivity.max(((chained - direct) / direct).abs());
    }
    checks.push(Check::bound("ratio_transitivity", worst_transitivity, 1e-9));
    checks.push(Check::bound(
        "parallel_null_deviation",
        parallel_null_check(&frames),
        1e-6,
    ));

    Suite {
        name: "duality",
        checks,
    }
}

fn wavecheck_suite() -> Suite {
    let sine = WaveProfile::new("sin", f64::sin);
    let grid = wavecheck_grid(128);
    let residual = residual_wave_equation(&sine, 1.0, 1.0, &grid).expect("finite profile");
    let order = match convergence_order(&sine, 1.0, 1.0, &grid, 3).expect("finite profile") {
        ConvergenceEstimate::Order(p) => p,
        ConvergenceEstimate::Saturated => f64::NAN,
    };
    let control_coarse =
        residual_wave_equation(&sine, 1.0, 2.0, &grid).expect("finite profile");
    let control_fine =
        residual_wave_equation(&sine, 1.0, 2.0, &grid.refined(4)).expect("finite profile");
    let cubic = WaveProfile::new("cubic", |u| u * u * u);
    let cubic_saturated = convergence_order(&cubic, 1.0, 1.0, &grid, 3)
        .expect("finite profile")
        .is_saturated();

    Suite {
        name: "wavecheck",
        checks: vec![
            Check::bound("sine_residual", residual, 1e-3),
            Check::window("sine_order", order, 1.8, 2.2),
            Check {
                name: "control_residual_persists",
                pass: control_fine > 1.0 && control_fine > 0.5 * control_coarse,
                detail: format!(
                    "omega = 2k residual {} after refinement",
                    fmt_human(control_fine)
                ),
            },
            Check {
                name: "cubic_profile_saturates",
                pass: cubic_saturated,
                detail: "stencil exact through cubics".into(),
            },
        ],
    }
}

/// Runs every suite at the documented default grids.
pub fn run_all() -> Vec<Suite> {
    vec![
        kinematics_suite(),
        fields_suite(),
        pulse_suite(),
        duality_suite(),
        wavecheck_suite(),
    ]
}

pub fn all_pass(suites: &[Suite]) -> bool {
    suites.iter().all(Suite::pass)
}

/// Human-readable PASS/FAIL listing.
pub fn render_text(suites: &[Suite]) -> String {
    let mut out = String::new();
    let mut failed = 0_usize;
    let mut total = 0_usize;
    for suite in suites {
        for check in &suite.checks {
            total += 1;
            if !check.pass {
                failed += 1;
            }
            out.push_str(&format!(
                "{} {}/{} — {}\n",
                if check.pass { "PASS" } else { "FAIL" },
                suite.name,
                check.name,
                check.detail
            ));
        }
    }
    out.push_str(&format!("verify: {total} checks, {failed} failed\n"));
    out
}
