//! Dispersion-force numerics for a pair of harmonically bound dipoles.
//!
//! Two neutral "atoms", each modeled as an isotropic harmonic oscillator of
//! mass `m`, charge `q` and frequency `Ω`, attract each other through vacuum
//! fluctuations of their dipole moments. This crate computes that interaction
//! energy in both regimes and cross-validates the results through independent
//! routes:
//!
//! * [`instantaneous`] — the Coulomb (non-retarded) approximation: the London
//!   `R⁻⁶` energy, the all-orders spectral formula with its complex branch
//!   (vacuum-decay channels at short distance), and an exact normal-mode
//!   oracle.
//! * [`retarded`] — the fourth-order energy with photon retardation, evaluated
//!   three ways (frequency-domain tensor integral, reduced one-dimensional
//!   integral, exact closed form in sine/cosine integrals), interpolating
//!   between the London `R⁻⁶` and Casimir-Polder `R⁻⁷` laws.
//! * [`kato`] — a generic Rayleigh-Schrödinger vacuum-energy engine on
//!   truncated Fock spaces, validating the perturbation series order by order.
//! * [`specfun`] — sine/cosine integrals, their auxiliary functions, and the
//!   deterministic adaptive quadrature shared by the modules above.
//! * [`units`] — physical parameters and the dimensionless groups `r = ΩR/c`
//!   and `g = α/R³` every other module works in.
//!
//! All internal computation is dimensionless with energies in units of `ħΩ`;
//! physical parameters enter only at API boundaries. The electromagnetic
//! convention is Heaviside-Lorentz (Coulomb kernel `1/(4π|x−x′|)`).

pub mod instantaneous;
pub mod kato;
pub mod retarded;
pub mod specfun;
pub mod units;

pub use instantaneous::ComplexEnergy;
pub use specfun::{QuadratureResult, QuadratureSpec};
pub use units::{DimlessPoint, ModelParams};
