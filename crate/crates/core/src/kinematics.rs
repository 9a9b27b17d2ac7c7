//! Four-vector algebra, boosts along x, and the collinear Doppler factor.
//!
//! Conventions used throughout the crate: natural units with c = 1, and a
//! boost of speed `beta` describes the frame K' moving toward +x of the base
//! frame K. [`Boost::four_vector`] takes components measured in K' and
//! returns components in K (so a light-like vector along +x picks up the
//! Doppler factor); the field and pulse transformations in the sibling
//! modules go the other way, from K into K'. Each operation documents its
//! own direction.

use crate::error::Error;

/// Relative tolerance of the light-like constraint on wave four-vectors.
pub const LIGHT_LIKE_TOL: f64 = 1e-12;

/// Frame change along the x axis, parameterized by beta = V/c.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Boost {
    beta: f64,
    gamma: f64,
}

impl Boost {
    /// Builds a boost for `beta` strictly inside (-1, 1).
    pub fn new(beta: f64) -> Result<Self, Error> {
        if !beta.is_finite() || beta.abs() >= 1.0 {
            return Err(Error::InvalidBeta(beta));
        }
        Ok(Self {
            beta,
            gamma: 1.0 / (1.0 - beta * beta).sqrt(),
        })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Lorentz factor 1/sqrt(1 - beta^2).
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// +1 when K' moves toward +x of K, -1 otherwise.
    pub fn direction(&self) -> f64 {
        if self.beta < 0.0 {
            -1.0
        } else {
            1.0
        }
    }

    /// Boost of the opposite speed; undoes this frame change.
    pub fn inverse(&self) -> Self {
        Self {
            beta: -self.beta,
            gamma: self.gamma,
        }
    }

    /// Single boost equivalent to applying `self` after `other`
    /// (relativistic velocity addition).
    pub fn compose(&self, other: &Self) -> Result<Self, Error> {
        Self::new((self.beta + other.beta) / (1.0 + self.beta * other.beta))
    }

    /// Transforms four-vector components measured in K' into components in
    /// K: t = gamma (t' + beta x'), x = gamma (x' + beta t'); y and z are
    /// unchanged. `inverse().four_vector` recovers the input.
    pub fn four_vector(&self, v: &FourVector) -> FourVector {
        FourVector::new(
            self.gamma * (v.t() + self.beta * v.x()),
            self.gamma * (v.x() + self.beta * v.t()),
            v.y(),
            v.z(),
        )
    }

    /// Frequency ratio nu/nu' = lambda'/lambda = (1 + beta)/sqrt(1 - beta^2)
    /// for a wave propagating along +x. Greater than 1 for beta > 0.
    pub fn doppler_factor(&self) -> f64 {
        self.gamma * (1.0 + self.beta)
    }
}

/// Contravariant four-vector (t, x, y, z), all components in one unit.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FourVector {
    t: f64,
    x: f64,
    y: f64,
    z: f64,
}

impl FourVector {
    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Self { t, x, y, z }
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    /// Minkowski square t^2 - x^2 - y^2 - z^2; invariant under boosts.
    pub fn minkowski_square(&self) -> f64 {
        self.t * self.t - self.x * self.x - self.y * self.y - self.z * self.z
    }

    /// Euclidean sum of squared components; the natural scale for rounding
    /// tolerances on the Minkowski square.
    pub fn magnitude_squared(&self) -> f64 {
        self.t * self.t + self.x * self.x + self.y * self.y + self.z * self.z
    }
}

/// Light-like wave four-vector (omega/c, k_x, k_y, k_z) with c = 1.
///
/// Construction enforces |t^2 - |k|^2| <= 1e-12 t^2, so frequency and
/// wavelength accessors are always meaningful.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveFourVector {
    components: FourVector,
}

impl WaveFourVector {
    pub fn new(components: FourVector) -> Result<Self, Error> {
        let k0 = components.t();
        let bound = LIGHT_LIKE_TOL * k0 * k0;
        let square = components.minkowski_square();
        if !square.is_finite() || square.abs() > bound {
            return Err(Error::NotLightLike {
                square: square.abs(),
                bound,
            });
        }
        Ok(Self { components })
    }

    /// Wave vector of a plane wave of frequency `nu` propagating along +x:
    /// (2 pi nu, 2 pi nu, 0, 0).
    pub fn collinear(nu: f64) -> Result<Self, Error> {
        if !nu.is_finite() || nu <= 0.0 {
            return Err(Error::InvalidFrequency(nu));
        }
        let k0 = std::f64::consts::TAU * nu;
        Ok(Self {
            components: FourVector::new(k0, k0, 0.0, 0.0),
        })
    }

    pub fn components(&self) -> &FourVector {
        &self.components
    }

    pub fn k0(&self) -> f64 {
        self.components.t()
    }

    /// Angular frequency; equals k0 with c = 1.
    pub fn omega(&self) -> f64 {
        self.components.t()
    }

    /// Frequency nu = omega / 2 pi.
    pub fn nu(&self) -> f64 {
        self.components.t() / std::f64::consts::TAU
    }

    /// Wavelength lambda = 2 pi / k0.
    pub fn lam(&self) -> f64 {
        std::f64::consts::TAU / self.components.t()
    }

    /// Components in K given components in K'; stays light-like.
    pub fn boost(&self, boost: &Boost) -> Result<Self, Error> {
        Self::new(boost.four_vector(&self.components))
    }
}
