//! Toolkit for collinear electromagnetic pulses in special relativity,
//! written in natural units (c = 1, Gaussian fields).
//!
//! The crate covers the full chain from frame kinematics to photon
//! bookkeeping:
//!
//! - [`kinematics`]: boosts along x, four-vector algebra, the collinear
//!   Doppler factor.
//! - [`fields`]: energy density and Poynting flux of field states, and the
//!   Lorentz transformation of field components.
//! - [`pulse`]: finite monochromatic wave trains, numerical pulse-energy
//!   integration, and the closed-form two-frame energy ratio.
//! - [`duality`]: photon ensembles with a frame-invariant count, the
//!   universal energy/frequency ratio check, and slope-through-origin
//!   recovery of the proportionality constant.
//! - [`wavecheck`]: finite-difference residuals of travelling-wave profiles
//!   against the 1D wave equation, with refinement-order estimation.
//!
//! All operations are pure functions of value types and safe to call
//! concurrently. Reductions use compensated summation so results do not
//! depend on evaluation order beyond the last ulp.

pub mod convergence;
pub mod duality;
pub mod error;
pub mod fields;
pub mod kinematics;
pub mod pulse;
pub mod summation;
pub mod wavecheck;

pub use convergence::ConvergenceEstimate;
pub use duality::{FrequencyEnergySample, PhotonEnsemble, PlanckFit};
pub use error::Error;
pub use fields::{FieldState, Vec3};
pub use kinematics::{Boost, FourVector, WaveFourVector};
pub use pulse::{MonochromaticPulse, QuadraturePlan, QuadratureRule, RatioReport};
pub use wavecheck::{Grid1D, WaveProfile};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
