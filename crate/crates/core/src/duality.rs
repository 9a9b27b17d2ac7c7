//! Photon bookkeeping on top of the pulse machinery.
//!
//! A pulse is regarded as `count` identical quanta; the count is a frame
//! invariant by construction. Transforming an ensemble re-integrates the
//! pulse energy numerically in the new frame, so the per-photon
//! energy/frequency ratio inherits its frame independence from the energy
//! ratio rather than being assumed.

use crate::error::Error;
use crate::kinematics::{Boost, FourVector};
use crate::pulse::{integrate_energy, MonochromaticPulse, QuadraturePlan};
use crate::summation::CompensatedSum;

/// Relative tolerance for the ensemble/pulse frequency consistency check.
const FREQUENCY_MATCH_TOL: f64 = 1e-12;

/// Relative separation below which two frequencies count as one for the
/// degenerate-fit check.
const DISTINCT_FREQUENCY_TOL: f64 = 1e-6;

/// A pulse regarded as a fixed number of identical quanta.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhotonEnsemble {
    count: u128,
    total_energy: f64,
    frequency: f64,
}

impl PhotonEnsemble {
    pub fn new(count: u128, total_energy: f64, frequency: f64) -> Result<Self, Error> {
        if count == 0 {
            return Err(Error::InvalidEnsemble("count must be at least 1".into()));
        }
        if !total_energy.is_finite() || total_energy <= 0.0 {
            return Err(Error::InvalidEnsemble(format!(
                "total energy must be positive and finite, got {total_energy}"
            )));
        }
        if !frequency.is_finite() || frequency <= 0.0 {
            return Err(Error::InvalidEnsemble(format!(
                "frequency must be positive and finite, got {frequency}"
            )));
        }
        Ok(Self {
            count,
            total_energy,
            frequency,
        })
    }

    /// Seeds the count as round(total_energy / (h0 * frequency)); the seed
    /// must round to at least one quantum.
    pub fn seeded(total_energy: f64, frequency: f64, h0: f64) -> Result<Self, Error> {
        if !h0.is_finite() || h0 <= 0.0 {
            return Err(Error::InvalidEnsemble(format!(
                "reference constant must be positive and finite, got {h0}"
            )));
        }
        let raw = total_energy / (h0 * frequency);
        if !raw.is_finite() || raw.round() < 1.0 {
            return Err(Error::InvalidEnsemble(format!(
                "seed count rounds to zero quanta (energy/(h0 nu) = {raw})"
            )));
        }
        Self::new(raw.round() as u128, total_energy, frequency)
    }

    pub fn count(&self) -> u128 {
        self.count
    }

    pub fn total_energy(&self) -> f64 {
        self.total_energy
    }

    pub fn frequency(&self) -> f64 {
        self.frequency
    }

    pub fn per_photon_energy(&self) -> f64 {
        self.total_energy / self.count as f64
    }
}

/// Ensemble described in the frame K' moving with `boost.beta()` toward +x.
/// The count is copied verbatim; the energy comes from re-integrating the
/// boosted pulse and the frequency follows the pulse. Errors when the
/// ensemble and pulse disagree on the base-frame frequency.
pub fn transform_ensemble(
    boost: &Boost,
    ensemble: &PhotonEnsemble,
    pulse: &MonochromaticPulse,
    plan: &QuadraturePlan,
) -> Result<PhotonEnsemble, Error> {
    if (ensemble.frequency - pulse.nu()).abs() > FREQUENCY_MATCH_TOL * pulse.nu() {
        return Err(Error::FrequencyMismatch {
            ensemble: ensemble.frequency,
            pulse: pulse.nu(),
        });
    }
    let boosted = pulse.boosted(boost);
    Ok(PhotonEnsemble {
        count: ensemble.count,
        total_energy: integrate_energy(&boosted, plan),
        frequency: boosted.nu(),
    })
}

/// One (frequency, per-photon energy) observation and the frame speed that
/// produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencyEnergySample {
    nu: f64,
    photon_energy: f64,
    beta: f64,
}

impl FrequencyEnergySample {
    pub fn new(nu: f64, photon_energy: f64, beta: f64) -> Result<Self, Error> {
        if !nu.is_finite() || nu <= 0.0 {
            return Err(Error::InvalidSample(format!(
                "frequency must be positive and finite, got {nu}"
            )));
        }
        if !photon_energy.is_finite() || photon_energy <= 0.0 {
            return Err(Error::InvalidSample(format!(
                "photon energy must be positive and finite, got {photon_energy}"
            )));
        }
        Ok(Self {
            nu,
            photon_energy,
            beta,
        })
    }

    pub fn from_ensemble(ensemble: &PhotonEnsemble, beta: f64) -> Result<Self, Error> {
        Self::new(ensemble.frequency(), ensemble.per_photon_energy(), beta)
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn photon_energy(&self) -> f64 {
        self.photon_energy
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// Relative deviation |(E1/E2)/(nu1/nu2) - 1|; zero when the two samples
/// share one energy/frequency slope.
pub fn universal_ratio_check(s1: &FrequencyEnergySample, s2: &FrequencyEnergySample) -> f64 {
    let energy_ratio = s1.photon_energy / s2.photon_energy;
    let frequency_ratio = s1.nu / s2.nu;
    (energy_ratio / frequency_ratio - 1.0).abs()
}

/// Result of the slope-through-origin least-squares fit E = h nu.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanckFit {
    pub h_est: f64,
    pub max_rel_residual: f64,
    pub n_samples: usize,
}

/// Fits the proportionality constant as sum(nu E)/sum(nu^2) with
/// compensated sums. Requires at least two samples whose frequencies differ
/// by more than 1e-6 relative; a single frequency leaves the
/// proportionality unfalsifiable.
pub fn fit_planck_constant(samples: &[FrequencyEnergySample]) -> Result<PlanckFit, Error> {
    if samples.len() < 2 {
        return Err(Error::DegenerateFit);
    }
    let nu_max = samples.iter().fold(0.0_f64, |m, s| m.max(s.nu));
    let nu_min = samples.iter().fold(f64::INFINITY, |m, s| m.min(s.nu));
    if nu_max - nu_min <= DISTINCT_FREQUENCY_TOL * nu_max {
        return Err(Error::DegenerateFit);
    }
    let mut cross = CompensatedSum::new();
    let mut norm = CompensatedSum::new();
    for s in samples {
        cross.add(s.nu * s.photon_energy);
        norm.add(s.nu * s.nu);
    }
    let h_est = cross.value() / norm.value();
    let max_rel_residual = samples
        .iter()
        .map(|s| ((s.photon_energy - h_est * s.nu) / (h_est * s.nu)).abs())
        .fold(0.0_f64, f64::max);
    Ok(PlanckFit {
        h_est,
        max_rel_residual,
        n_samples: samples.len(),
    })
}

/// Max relative spread of total_energy/frequency across a sweep, measured
/// against the first frame. The per-frame vectors (E, E, 0, 0) and
/// (nu, nu, 0, 0) are light-like by construction (their first two
/// components are bit-identical, so the Minkowski square is exactly zero);
/// their zeroth components sharing one ratio across frames is the quantity
/// returned.
pub fn parallel_null_check(ensembles: &[PhotonEnsemble]) -> f64 {
    let mut reference: Option<f64> = None;
    let mut max_deviation = 0.0_f64;
    for ens in ensembles {
        let energy_vec = FourVector::new(ens.total_energy, ens.total_energy, 0.0, 0.0);
        let frequency_vec = FourVector::new(ens.frequency, ens.frequency, 0.0, 0.0);
        debug_assert_eq!(energy_vec.minkowski_square(), 0.0);
        debug_assert_eq!(frequency_vec.minkowski_square(), 0.0);
        let ratio = energy_vec.t() / frequency_vec.t();
        match reference {
            None => reference = Some(ratio),
            Some(r) => max_deviation = max_deviation.max((ratio / r - 1.0).abs()),
        }
    }
    max_deviation
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pulse::QuadratureRule;
    use approx::assert_relative_eq;

    fn lab_setup() -> (MonochromaticPulse, QuadraturePlan, PhotonEnsemble) {
        let pulse = MonochromaticPulse::new(1.0, 1.0, 8, 0.0).unwrap();
        let plan = QuadraturePlan::default();
        let energy = integrate_energy(&pulse, &plan);
        let ensemble = PhotonEnsemble::new(100, energy, pulse.nu()).unwrap();
        (pulse, plan, ensemble)
    }

    #[test]
    fn constructor_guards() {
        assert!(PhotonEnsemble::new(0, 1.0, 1.0).is_err());
        assert!(PhotonEnsemble::new(1, -1.0, 1.0).is_err());
        assert!(PhotonEnsemble::new(1, 1.0, 0.0).is_err());
        assert!(FrequencyEnergySample::new(1.0, 0.0, 0.0).is_err());
        assert!(FrequencyEnergySample::new(-1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn seeding_rounds_the_count() {
        let ens = PhotonEnsemble::seeded(32.0, 1.0, 1.0).unwrap();
        assert_eq!(ens.count(), 32);
        assert_eq!(ens.per_photon_energy(), 1.0);
        // Tiny reference constants produce astronomically many quanta.
        let tiny = PhotonEnsemble::seeded(32.0, 1.0, 6.62607015e-27).unwrap();
        assert!(tiny.count() > 4_000_000_000_000_000_000_000_000_000_u128);
        assert!(PhotonEnsemble::seeded(0.3, 1.0, 1.0).is_err());
    }

    #[test]
    fn rest_transform_is_identity() {
        let (pulse, plan, ens) = lab_setup();
        let out = transform_ensemble(&Boost::new(0.0).unwrap(), &ens, &pulse, &plan).unwrap();
        assert_eq!(out, ens);
    }

    #[test]
    fn transform_rejects_frequency_mismatch() {
        let (pulse, plan, _) = lab_setup();
        let stale = PhotonEnsemble::new(100, 1.0, 2.0).unwrap();
        let err = transform_ensemble(&Boost::new(0.6).unwrap(), &stale, &pulse, &plan);
        assert!(matches!(err, Err(Error::FrequencyMismatch { .. })));
    }

    #[test]
    fn transformed_energy_ratio_matches_closed_form() {
        let (pulse, plan, ens) = lab_setup();
        let b = Boost::new(0.6).unwrap();
        let out = transform_ensemble(&b, &ens, &pulse, &plan).unwrap();
        assert_eq!(out.count(), 100);
        assert_relative_eq!(out.frequency(), 0.5, max_relative = 1e-12);
        let ratio = ens.total_energy() / out.total_energy();
        assert_relative_eq!(ratio, 2.0, max_relative = 1e-6);
    }

    #[test]
    fn per_photon_ratio_follows_frequency_ratio() {
        let (pulse, plan, ens) = lab_setup();
        let b = Boost::new(0.8).unwrap();
        let out = transform_ensemble(&b, &ens, &pulse, &plan).unwrap();
        let energy_ratio = out.per_photon_energy() / ens.per_photon_energy();
        let frequency_ratio = out.frequency() / ens.frequency();
        assert_relative_eq!(energy_ratio, frequency_ratio, max_relative = 1e-6);
    }

    #[test]
    fn universal_ratio_of_identical_samples_is_zero() {
        let s = FrequencyEnergySample::new(1.0, 1.0, 0.0).unwrap();
        assert_eq!(universal_ratio_check(&s, &s), 0.0);
    }

    #[test]
    fn universal_ratio_across_sweep_frames() {
        let (pulse, plan, ens) = lab_setup();
        let s1 = FrequencyEnergySample::from_ensemble(
            &transform_ensemble(&Boost::new(0.6).unwrap(), &ens, &pulse, &plan).unwrap(),
            0.6,
        )
        .unwrap();
        let s2 = FrequencyEnergySample::from_ensemble(
            &transform_ensemble(&Boost::new(0.8).unwrap(), &ens, &pulse, &plan).unwrap(),
            0.8,
        )
        .unwrap();
        assert!(universal_ratio_check(&s1, &s2) <= 1e-6);
    }

    #[test]
    fn universal_ratio_flags_violations() {
        let s1 = FrequencyEnergySample::new(1.0, 1.0, 0.0).unwrap();
        let s2 = FrequencyEnergySample::new(2.0, 4.0, 0.6).unwrap();
        assert_relative_eq!(universal_ratio_check(&s2, &s1), 1.0, max_relative = 1e-15);
    }

    #[test]
    fn fit_recovers_exact_slope() {
        let samples: Vec<_> = [1.0, 2.0, 3.5, 5.0]
            .iter()
            .map(|nu| FrequencyEnergySample::new(*nu, 1.0 * nu, 0.0).unwrap())
            .collect();
        let fit = fit_planck_constant(&samples).unwrap();
        assert_relative_eq!(fit.h_est, 1.0, max_relative = 1e-12);
        assert!(fit.max_rel_residual <= 1e-12);
        assert_eq!(fit.n_samples, 4);
    }

    #[test]
    fn fit_rejects_single_frequency() {
        let samples = vec![
            FrequencyEnergySample::new(1.0, 1.0, 0.0).unwrap(),
            FrequencyEnergySample::new(1.0 + 1e-9, 1.0, 0.1).unwrap(),
        ];
        assert!(matches!(
            fit_planck_constant(&samples),
            Err(Error::DegenerateFit)
        ));
        assert!(matches!(
            fit_planck_constant(&samples[..1]),
            Err(Error::DegenerateFit)
        ));
    }

    #[test]
    fn sweep_fit_recovers_seed_constant() {
        let pulse = MonochromaticPulse::new(4.0 * (2.0 * std::f64::consts::PI).sqrt(), 1.0, 8, 0.0)
            .unwrap();
        let plan = QuadraturePlan::default();
        let energy = integrate_energy(&pulse, &plan);
        let seed = PhotonEnsemble::seeded(energy, pulse.nu(), 1.0).unwrap();
        let samples: Vec<_> = [0.0, 0.2, 0.4, 0.6, 0.8]
            .iter()
            .map(|beta| {
                let b = Boost::new(*beta).unwrap();
                let ens = transform_ensemble(&b, &seed, &pulse, &plan).unwrap();
                FrequencyEnergySample::from_ensemble(&ens, *beta).unwrap()
            })
            .collect();
        let fit = fit_planck_constant(&samples).unwrap();
        assert!((fit.h_est - 1.0).abs() <= 1e-6, "h = {}", fit.h_est);
        assert!(fit.max_rel_residual <= 1e-6);
    }

    #[test]
    fn null_check_single_frame_is_zero() {
        let ens = PhotonEnsemble::new(10, 2.0, 1.0).unwrap();
        assert_eq!(parallel_null_check(&[ens]), 0.0);
        assert_eq!(parallel_null_check(&[]), 0.0);
    }

    #[test]
    fn null_check_over_sweep_is_tight() {
        let (pulse, plan, ens) = lab_setup();
        let mut frames = vec![ens];
        for beta in [0.6, 0.8] {
            frames.push(
                transform_ensemble(&Boost::new(beta).unwrap(), &ens, &pulse, &plan).unwrap(),
            );
        }
        assert!(parallel_null_check(&frames) <= 1e-6);
    }

    #[test]
    fn null_check_flags_corrupted_frame() {
        let (pulse, plan, ens) = lab_setup();
        let good = transform_ensemble(&Boost::new(0.6).unwrap(), &ens, &pulse, &plan).unwrap();
        let corrupted =
            PhotonEnsemble::new(good.count(), 2.0 * good.total_energy(), good.frequency())
                .unwrap();
        let deviation = parallel_null_check(&[ens, corrupted]);
        assert!((deviation - 1.0).abs() <= 1e-6, "deviation {deviation}");
    }

    #[test]
    fn midpoint_plan_also_meets_ensemble_tolerance() {
        let (pulse, _, ens) = lab_setup();
        let plan = QuadraturePlan::new(256, QuadratureRule::Midpoint).unwrap();
        let ens = PhotonEnsemble::new(ens.count(), integrate_energy(&pulse, &plan), pulse.nu())
            .unwrap();
        let out = transform_ensemble(&Boost::new(0.6).unwrap(), &ens, &pulse, &plan).unwrap();
        let ratio = ens.total_energy() / out.total_energy();
        assert_relative_eq!(ratio, 2.0, max_relative = 1e-6);
    }
}
