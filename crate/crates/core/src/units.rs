//! Physical parameters and the dimensionless groups used everywhere else.
//!
//! The model has five inputs: `ħ`, `c`, the oscillator mass `m`, charge `q`
//! and frequency `Ω`. Only two combinations matter for the interaction
//! energy at separation `R`:
//!
//! * `r = ΩR/c` — separation in units of the reduced photon wavelength,
//!   controls retardation;
//! * `g = α/R³` — the instantaneous dipole coupling, with the static
//!   polarizability `α = q²/(4π m Ω²)`.
//!
//! Energies are reported in units of `ħΩ` throughout the crate.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum UnitsError {
    #[error("parameter `{name}` must be finite and strictly positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("charge must be finite and nonzero, got {0}")]
    BadCharge(f64),
    #[error("separation must be finite and strictly positive, got {0}")]
    BadSeparation(f64),
    #[error("dimensionless separation must be finite and strictly positive, got {0}")]
    BadDimlessSeparation(f64),
    #[error("dimensionless coupling must be finite and nonnegative, got {0}")]
    BadCoupling(f64),
}

/// Physical constants and oscillator parameters of the two-atom model.
///
/// Immutable after construction; all derived quantities are pure functions
/// of the fields.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    hbar: f64,
    c: f64,
    m: f64,
    q: f64,
    omega: f64,
}

impl ModelParams {
    pub fn new(hbar: f64, c: f64, m: f64, q: f64, omega: f64) -> Result<Self, UnitsError> {
        let check = |name: &'static str, value: f64| {
            if value.is_finite() && value > 0.0 {
                Ok(value)
            } else {
                Err(UnitsError::NonPositive { name, value })
            }
        };
        check("hbar", hbar)?;
        check("c", c)?;
        check("m", m)?;
        check("omega", omega)?;
        if !q.is_finite() || q == 0.0 {
            return Err(UnitsError::BadCharge(q));
        }
        Ok(Self { hbar, c, m, q, omega })
    }

    /// All parameters equal to one; the natural unit system of the crate.
    pub fn unit() -> Self {
        Self { hbar: 1.0, c: 1.0, m: 1.0, q: 1.0, omega: 1.0 }
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn mass(&self) -> f64 {
        self.m
    }

    pub fn charge(&self) -> f64 {
        self.q
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Static polarizability `α = q²/(4π m Ω²)` (a volume).
    pub fn polarizability(&self) -> f64 {
        self.q * self.q / (4.0 * std::f64::consts::PI * self.m * self.omega * self.omega)
    }

    /// Correlator amplitude `A = q²Ω/(4π m) = α Ω³`, the normalization of the
    /// crossover curve `−E·r⁶/A²`.
    pub fn amplitude(&self) -> f64 {
        self.polarizability() * self.omega.powi(3)
    }

    /// Quantum of energy `ħΩ` that all dimensionless energies are measured in.
    pub fn energy_scale(&self) -> f64 {
        self.hbar * self.omega
    }

    /// Map a physical separation to the dimensionless pair `(r, g)`.
    pub fn to_dimensionless(&self, separation: f64) -> Result<DimlessPoint, UnitsError> {
        if !separation.is_finite() || separation <= 0.0 {
            return Err(UnitsError::BadSeparation(separation));
        }
        Ok(DimlessPoint {
            r: self.omega * separation / self.c,
            g: self.polarizability() / separation.powi(3),
        })
    }

    /// Inverse of [`Self::to_dimensionless`]: recover the separation from `r`.
    pub fn from_dimensionless(&self, point: &DimlessPoint) -> f64 {
        point.r * self.c / self.omega
    }
}

/// A separation expressed through the two dimensionless groups.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimlessPoint {
    r: f64,
    g: f64,
}

impl DimlessPoint {
    pub fn new(r: f64, g: f64) -> Result<Self, UnitsError> {
        if !r.is_finite() || r <= 0.0 {
            return Err(UnitsError::BadDimlessSeparation(r));
        }
        if !g.is_finite() || g < 0.0 {
            return Err(UnitsError::BadCoupling(g));
        }
        Ok(Self { r, g })
    }

    /// Retardation parameter `ΩR/c`.
    pub fn r(&self) -> f64 {
        self.r
    }

    /// Instantaneous coupling `α/R³`.
    pub fn g(&self) -> f64 {
        self.g
    }
}
