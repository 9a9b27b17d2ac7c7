//! Electromagnetic field values in Gaussian units: energy density, Poynting
//! flux, and the Lorentz transformation of field components for boosts
//! along x.
//!
//! The canonical plane wave of this crate has E along +y, H along +z, equal
//! magnitudes, and flux E x H along +x. [`boost_fields`] maps fields
//! measured in the base frame K into the frame K' moving with `beta` toward
//! +x; the canonical wave's transverse components then pick up the factor
//! gamma (1 - beta), keeping the flux along +x.

use std::f64::consts::PI;

use crate::kinematics::Boost;

/// 3-vector of field components.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(&self, other: &Self) -> Self {
        Self::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm_squared(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }
}

/// Electric and magnetic field values at one spacetime point.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FieldState {
    pub e: Vec3,
    pub h: Vec3,
}

impl FieldState {
    pub const ZERO: Self = Self {
        e: Vec3::ZERO,
        h: Vec3::ZERO,
    };

    pub const fn new(e: Vec3, h: Vec3) -> Self {
        Self { e, h }
    }

    /// Canonical plane-wave sample of signed magnitude `s`:
    /// E = (0, s, 0), H = (0, 0, s), flux along +x.
    pub fn plane_wave(s: f64) -> Self {
        Self::new(Vec3::new(0.0, s, 0.0), Vec3::new(0.0, 0.0, s))
    }

    /// Spatial energy density W = (|E|^2 + |H|^2) / 8 pi.
    pub fn energy_density(&self) -> f64 {
        (self.e.norm_squared() + self.h.norm_squared()) / (8.0 * PI)
    }

    /// Energy flux S = (c / 4 pi) E x H with c = 1. For plane-wave states
    /// |S| equals the energy density.
    pub fn poynting(&self) -> Vec3 {
        self.e.cross(&self.h).scale(1.0 / (4.0 * PI))
    }
}

/// Fields in the frame K' moving with `boost.beta()` toward +x, given
/// fields in the base frame K. The x components are unchanged; the
/// transverse components mix as
/// E_y' = gamma (E_y - beta H_z), E_z' = gamma (E_z + beta H_y),
/// H_y' = gamma (H_y + beta E_z), H_z' = gamma (H_z - beta E_y).
/// `boost_fields(inverse, ...)` recovers the input.
pub fn boost_fields(boost: &Boost, f: &FieldState) -> FieldState {
    let g = boost.gamma();
    let b = boost.beta();
    FieldState::new(
        Vec3::new(f.e.x, g * (f.e.y - b * f.h.z), g * (f.e.z + b * f.h.y)),
        Vec3::new(f.h.x, g * (f.h.y + b * f.e.z), g * (f.h.z - b * f.e.y)),
    )
}

/// Closed-form density ratio W/W' = (1 + beta)^2 / (1 - beta^2) for the
/// collinear plane wave; equals the Doppler factor squared.
pub fn energy_density_ratio(boost: &Boost) -> f64 {
    let b = boost.beta();
    (1.0 + b) * (1.0 + b) / (1.0 - b * b)
}
