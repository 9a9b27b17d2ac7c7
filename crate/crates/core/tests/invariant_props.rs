//! Property tests for the frame-change invariants: Minkowski squares,
//! boost round trips, Doppler reciprocity, field invariants, and photon
//! bookkeeping.

use proptest::prelude::*;
use relpulse::duality::{
    fit_planck_constant, transform_ensemble, FrequencyEnergySample, PhotonEnsemble,
};
use relpulse::fields::{boost_fields, energy_density_ratio, FieldState, Vec3};
use relpulse::kinematics::{Boost, FourVector};
use relpulse::pulse::{integrate_energy, MonochromaticPulse, QuadraturePlan, QuadratureRule};

fn beta() -> impl Strategy<Value = f64> {
    -0.99..=0.99_f64
}

fn component() -> impl Strategy<Value = f64> {
    -1e3..=1e3_f64
}

proptest! {
    /// The Minkowski square survives a boost, with rounding scaled by the
    /// boosted components' magnitude.
    #[test]
    fn minkowski_square_is_preserved(
        b in beta(),
        t in component(), x in component(), y in component(), z in component(),
    ) {
        let boost = Boost::new(b).unwrap();
        let v = FourVector::new(t, x, y, z);
        let s = v.minkowski_square();
        let s_boosted = boost.four_vector(&v).minkowski_square();
        let scale = (boost.gamma() * boost.gamma() * v.magnitude_squared()).max(1.0);
        prop_assert!(
            (s - s_boosted).abs() <= 1e-9 * scale,
            "s={s}, s'={s_boosted}, scale={scale}"
        );
    }

    /// Unit-scale null vectors stay null after a boost, to 1e-12 of the
    /// boosted frequency scale (gamma k0)^2.
    #[test]
    fn null_vectors_stay_null(b in beta(), cos_theta in -1.0..=1.0_f64, phi in 0.0..std::f64::consts::TAU) {
        let boost = Boost::new(b).unwrap();
        let sin_theta = (1.0 - cos_theta * cos_theta).sqrt();
        let v = FourVector::new(1.0, cos_theta, sin_theta * phi.cos(), sin_theta * phi.sin());
        let boosted = boost.four_vector(&v);
        let scale = boost.gamma() * boost.gamma();
        prop_assert!(
            boosted.minkowski_square().abs() <= 1e-12 * scale,
            "square = {:e}",
            boosted.minkowski_square()
        );
    }

    /// Applying the inverse boost recovers every component.
    #[test]
    fn boost_round_trip_is_identity(
        b in beta(),
        t in component(), x in component(), y in component(), z in component(),
    ) {
        let boost = Boost::new(b).unwrap();
        let v = FourVector::new(t, x, y, z);
        let back = boost.inverse().four_vector(&boost.four_vector(&v));
        let tol = 1e-10 * t.abs().max(x.abs()).max(y.abs()).max(z.abs()).max(1.0);
        prop_assert!((back.t() - t).abs() <= tol);
        prop_assert!((back.x() - x).abs() <= tol);
        prop_assert!((back.y() - y).abs() <= tol);
        prop_assert!((back.z() - z).abs() <= tol);
    }

    /// Forward and backward Doppler factors are reciprocal, and the forward
    /// factor blue-shifts.
    #[test]
    fn doppler_reciprocity_and_blue_shift(b in 1e-6..=0.99_f64) {
        let fwd = Boost::new(b).unwrap().doppler_factor();
        let bwd = Boost::new(-b).unwrap().doppler_factor();
        prop_assert!((fwd * bwd - 1.0).abs() <= 1e-12);
        prop_assert!(fwd > 1.0);
    }

    /// |E|^2 - |H|^2 and E.H are unchanged by the field transformation,
    /// with rounding scaled by the boosted field magnitude.
    #[test]
    fn field_invariants_are_preserved(
        b in beta(),
        ex in component(), ey in component(), ez in component(),
        hx in component(), hy in component(), hz in component(),
    ) {
        let boost = Boost::new(b).unwrap();
        let f = FieldState::new(Vec3::new(ex, ey, ez), Vec3::new(hx, hy, hz));
        let g = boost_fields(&boost, &f);
        let scale = (boost.gamma() * boost.gamma()
            * (f.e.norm_squared() + f.h.norm_squared()))
        .max(1.0);
        let difference = f.e.norm_squared() - f.h.norm_squared();
        let difference_boosted = g.e.norm_squared() - g.h.norm_squared();
        prop_assert!((difference - difference_boosted).abs() <= 1e-9 * scale);
        prop_assert!((f.e.dot(&f.h) - g.e.dot(&g.h)).abs() <= 1e-9 * scale);
    }

    /// The closed-form density ratio matches the brute-force route: boost
    /// the plane wave into the frame the ratio is written against.
    #[test]
    fn density_ratio_matches_brute_force(b in beta(), amplitude in 1e-3..=1e3_f64) {
        let boost = Boost::new(b).unwrap();
        let f = FieldState::plane_wave(amplitude);
        let primed = boost_fields(&Boost::new(-b).unwrap(), &f);
        let brute = primed.energy_density() / f.energy_density();
        let closed = energy_density_ratio(&boost);
        prop_assert!(
            ((brute - closed) / closed).abs() <= 1e-10,
            "brute={brute}, closed={closed}"
        );
    }

    /// Eq-squared consistency between the density ratio and the Doppler
    /// factor.
    #[test]
    fn density_ratio_is_squared_doppler(b in beta()) {
        let boost = Boost::new(b).unwrap();
        let d = boost.doppler_factor();
        prop_assert!(((energy_density_ratio(&boost) - d * d) / (d * d)).abs() <= 1e-12);
    }

    /// Photon counts survive arbitrary two-step boost chains.
    #[test]
    fn photon_count_survives_boost_chains(b1 in beta(), b2 in beta()) {
        let pulse = MonochromaticPulse::new(2.0, 1.0, 2, 0.0).unwrap();
        let plan = QuadraturePlan::new(64, QuadratureRule::Simpson).unwrap();
        let seed = PhotonEnsemble::new(
            123_456,
            integrate_energy(&pulse, &plan),
            pulse.nu(),
        )
        .unwrap();
        let boost1 = Boost::new(b1).unwrap();
        let boost2 = Boost::new(b2).unwrap();
        let step1 = transform_ensemble(&boost1, &seed, &pulse, &plan).unwrap();
        let step2 =
            transform_ensemble(&boost2, &step1, &pulse.boosted(&boost1), &plan).unwrap();
        prop_assert_eq!(step1.count(), seed.count());
        prop_assert_eq!(step2.count(), seed.count());
    }

    /// Pairwise energy ratios across one sweep compose transitively.
    #[test]
    fn energy_ratios_compose_transitively(ba in beta(), bb in beta(), bc in beta()) {
        let pulse = MonochromaticPulse::new(1.0, 1.0, 2, 0.0).unwrap();
        let plan = QuadraturePlan::new(64, QuadratureRule::Simpson).unwrap();
        let seed = PhotonEnsemble::new(10, integrate_energy(&pulse, &plan), pulse.nu()).unwrap();
        let frame = |b: f64| {
            transform_ensemble(&Boost::new(b).unwrap(), &seed, &pulse, &plan)
                .unwrap()
                .total_energy()
        };
        let (ea, eb, ec) = (frame(ba), frame(bb), frame(bc));
        let chained = (ea / eb) * (eb / ec);
        let direct = ea / ec;
        prop_assert!(((chained - direct) / direct).abs() <= 1e-9);
    }
}

#[test]
fn fit_is_order_independent() {
    let samples: Vec<_> = (1..=9)
        .map(|i| {
            let nu = 0.3 * i as f64;
            FrequencyEnergySample::new(nu, 2.5 * nu * (1.0 + 1e-9 * i as f64), 0.0).unwrap()
        })
        .collect();
    let h0 = fit_planck_constant(&samples).unwrap().h_est;
    let mut reversed = samples.clone();
    reversed.reverse();
    let mut interleaved: Vec<_> = samples.iter().copied().step_by(2).collect();
    interleaved.extend(samples.iter().copied().skip(1).step_by(2));
    for permuted in [reversed, interleaved] {
        let h = fit_planck_constant(&permuted).unwrap().h_est;
        assert!(
            ((h - h0) / h0).abs() <= 1e-12,
            "order changed fit: {h} vs {h0}"
        );
    }
}

#[test]
fn fit_depends_only_on_per_photon_energies() {
    // Doubling the pulse energy (amplitude x sqrt 2) and the seeded count
    // together leaves every per-photon energy, and therefore the slope,
    // unchanged.
    let plan = QuadraturePlan::default();
    let betas = [0.0, 0.2, 0.4, 0.6, 0.8];
    let sweep = |amplitude: f64, count: u128| {
        let pulse = MonochromaticPulse::new(amplitude, 1.0, 8, 0.0).unwrap();
        let seed =
            PhotonEnsemble::new(count, integrate_energy(&pulse, &plan), pulse.nu()).unwrap();
        let samples: Vec<_> = betas
            .iter()
            .map(|b| {
                let ens =
                    transform_ensemble(&Boost::new(*b).unwrap(), &seed, &pulse, &plan).unwrap();
                FrequencyEnergySample::from_ensemble(&ens, *b).unwrap()
            })
            .collect();
        fit_planck_constant(&samples).unwrap().h_est
    };
    let base = sweep(1.0, 100);
    let scaled = sweep(std::f64::consts::SQRT_2, 200);
    assert!(
        ((scaled - base) / base).abs() <= 1e-9,
        "{scaled} vs {base}"
    );
}

#[test]
fn fit_on_exact_model_reaches_machine_precision() {
    for h_true in [1.0, 6.62607015e-27, 3.77e4] {
        let samples: Vec<_> = [0.5, 1.0, 1.7, 2.4, 9.0]
            .iter()
            .map(|nu| FrequencyEnergySample::new(*nu, h_true * nu, 0.0).unwrap())
            .collect();
        let fit = fit_planck_constant(&samples).unwrap();
        assert!(((fit.h_est - h_true) / h_true).abs() <= 1e-12);
        assert!(fit.max_rel_residual <= 1e-12);
    }
}
