//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by constructors and checked operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Boost speed outside (-1, 1) or non-finite.
    #[error("boost speed must be finite with |beta| < 1, got {0}")]
    InvalidBeta(f64),

    /// Four-vector handed to a wave-vector constructor is not null.
    #[error("wave four-vector is not light-like: |square| = {square:e} exceeds {bound:e}")]
    NotLightLike { square: f64, bound: f64 },

    /// Frequency must be positive and finite.
    #[error("frequency must be positive and finite, got {0}")]
    InvalidFrequency(f64),

    /// Pulse parameters violate their invariants.
    #[error("invalid pulse: {0}")]
    InvalidPulse(String),

    /// Quadrature plan violates its invariants.
    #[error("invalid quadrature plan: {0}")]
    InvalidPlan(String),

    /// Grid or refinement-study parameters violate their invariants.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// Photon-ensemble parameters violate their invariants.
    #[error("invalid photon ensemble: {0}")]
    InvalidEnsemble(String),

    /// Frequency/energy sample with a non-positive entry.
    #[error("invalid sample: {0}")]
    InvalidSample(String),

    /// Ensemble and pulse disagree on the frame frequency.
    #[error("ensemble frequency {ensemble} does not match pulse frequency {pulse}")]
    FrequencyMismatch { ensemble: f64, pulse: f64 },

    /// Proportionality is unfalsifiable from fewer than two distinct
    /// frequencies.
    #[error("fit needs at least two samples at distinct frequencies")]
    DegenerateFit,

    /// A wave profile returned NaN or infinity on the sampled range.
    #[error("profile returned a non-finite value at phase {0}")]
    NonFiniteSample(f64),
}
