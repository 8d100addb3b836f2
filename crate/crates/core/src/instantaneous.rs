//! Interaction energy in the instantaneous (Coulomb) approximation.
//!
//! With retardation switched off, the two dipoles couple through the static
//! kernel `Fⁱʲ(R) = (3RⁱRʲ/R⁵ − δⁱʲ/R³)/4π`, whose eigenvalues per Cartesian
//! channel are `(−1, −1, +2)·g` in units of the dimensionless coupling
//! `g = α/R³` (two transverse channels, one longitudinal with doubled
//! coupling). Each channel is a pair of bilinearly coupled oscillators, so
//! the exact ground-state shift is a sum of normal-mode zero-point energies:
//!
//! ```text
//! E/ħΩ = ½ [ 2(√(1+g) + √(1−g) − 2) + (√(1+2g) + √(1−2g) − 2) ]
//! ```
//!
//! The same energy follows from the all-orders spectral formula
//!
//! ```text
//! E/ħΩ = ½ ∫ dν/2π { 2 ln[1 − (g/(ν²+1))²] + ln[1 − (2g/(ν²+1))²] }
//! ```
//!
//! implemented here by quadrature as an independent route. For `g > 1/2` the
//! longitudinal channel inverts (`1 − 2g < 0`) and the energy acquires a
//! negative imaginary part — the vacuum can decay; a second channel opens at
//! `g > 1`. In terms of physical separations the channels open at
//! `R₁ = (2α)^{1/3}` and `R₂ = α^{1/3}`.
//!
//! Only interaction energies are computed; distance-independent self-energy
//! terms are excluded from the Hamiltonian split.

use thiserror::Error;

use crate::specfun::{integrate_semi_infinite_with_breakpoints, QuadratureError, QuadratureSpec};
use crate::units::ModelParams;

#[derive(Debug, Error, PartialEq)]
pub enum InstantaneousError {
    #[error("coupling must be finite and nonnegative, got {0}")]
    NegativeCoupling(f64),
    #[error("series coefficients vanish at odd order {0}")]
    OddOrder(u32),
    #[error("series coefficients implemented for orders 2..=8, got {0}")]
    UnsupportedOrder(u32),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

/// Interaction energy in `ħΩ` units with its vacuum-decay imaginary part.
///
/// The imaginary part is zero exactly while every coupling channel satisfies
/// `|λ| ≤ 1`, and is negative (decay, never growth) beyond that.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexEnergy {
    pub re: f64,
    pub im: f64,
}

impl ComplexEnergy {
    pub const ZERO: Self = Self { re: 0.0, im: 0.0 };
}

/// The static dipole coupling kernel, reduced to its three channel
/// eigenvalues. Exposed for tests and for the Fock-space builders.
#[derive(Debug, Clone, Copy)]
pub struct DipoleCouplingTensor {
    g: f64,
}

impl DipoleCouplingTensor {
    pub fn new(g: f64) -> Self {
        Self { g }
    }

    /// Channel couplings `(−g, −g, +2g)`: two transverse, one longitudinal.
    pub fn eigenvalues(&self) -> [f64; 3] {
        [-self.g, -self.g, 2.0 * self.g]
    }

    /// The kernel is traceless away from the origin.
    pub fn trace(&self) -> f64 {
        self.eigenvalues().iter().sum()
    }
}

/// Imaginary-time dipole autocorrelation of a single atom,
/// `⟨T x(τ) x(τ′)⟩ = ħ/(2mΩ) · e^{−Ω|τ−τ′|}` per Cartesian component.
#[derive(Debug, Clone, Copy)]
pub struct DipoleCorrelator {
    prefactor: f64,
    decay_rate: f64,
}

impl DipoleCorrelator {
    pub fn from_params(p: &ModelParams) -> Self {
        Self { prefactor: p.hbar() / (2.0 * p.mass() * p.omega()), decay_rate: p.omega() }
    }

    pub fn prefactor(&self) -> f64 {
        self.prefactor
    }

    pub fn decay_rate(&self) -> f64 {
        self.decay_rate
    }

    pub fn eval(&self, tau: f64, tau_prime: f64) -> f64 {
        self.prefactor * (-self.decay_rate * (tau - tau_prime).abs()).exp()
    }
}

/// Second-order (London) energy `−(3/4) g²` in `ħΩ` units.
pub fn london_energy(g: f64) -> Result<f64, InstantaneousError> {
    check_coupling(g)?;
    Ok(-0.75 * g * g)
}

/// Exact ground-state shift from the normal modes of the three coupled
/// channels, in `ħΩ` units.
///
/// For an inverted channel (`1 − λ < 0`) the square root is taken on the
/// branch contributing `−i√|1−λ|`, so the imaginary part is nonpositive
/// (a decaying vacuum).
pub fn exact_energy_normal_modes(g: f64) -> ComplexEnergy {
    debug_assert!(g >= 0.0, "coupling must be nonnegative");
    let mut energy = ComplexEnergy::ZERO;
    for lambda in DipoleCouplingTensor::new(g).eigenvalues() {
        let (re, im) = channel_shift(lambda.abs());
        energy.re += 0.5 * re;
        energy.im += 0.5 * im;
    }
    energy
}

/// `√(1+λ) + √(1−λ) − 2` with the decaying branch for `λ > 1`.
fn channel_shift(lambda: f64) -> (f64, f64) {
    if lambda <= 1.0 {
        ((1.0 + lambda).sqrt() + (1.0 - lambda).sqrt() - 2.0, 0.0)
    } else {
        ((1.0 + lambda).sqrt() - 2.0, -(lambda - 1.0).sqrt())
    }
}

/// All-orders energy from the frequency-domain spectral formula, in `ħΩ`
/// units, evaluated by adaptive quadrature.
///
/// For `g ≤ 1/2` the integrand is real everywhere. Beyond threshold the
/// logarithm's argument turns negative on `|ν| < √(λ−1)` per inverted
/// channel; there the real part integrates `ln|…|` (the roots are supplied
/// to the quadrature as panel boundaries) and the imaginary part picks up
/// the constant `−π` per unit length of the segment — the branch with
/// `im ≤ 0`, matching the normal-mode convention — which integrates in
/// closed form.
pub fn exact_energy_spectral(
    g: f64,
    spec: &QuadratureSpec,
) -> Result<ComplexEnergy, InstantaneousError> {
    check_coupling(g)?;
    if g == 0.0 {
        return Ok(ComplexEnergy::ZERO);
    }

    // channel couplings with multiplicities: (2g x1, g x2)
    let channels = [(2.0 * g, 1.0), (g, 2.0)];

    let mut breakpoints = Vec::new();
    let mut im = 0.0;
    for &(lambda, mult) in &channels {
        if lambda > 1.0 {
            let root = (lambda - 1.0).sqrt();
            breakpoints.push(root);
            // (1/2) * (mult/2pi) * (-pi) * 2*root
            im -= 0.5 * mult * root;
        }
    }
    breakpoints.sort_by(|a, b| a.partial_cmp(b).expect("finite roots"));

    let integrand = move |nu: f64| {
        let denom = nu * nu + 1.0;
        let mut s = 0.0;
        for &(lambda, mult) in &channels {
            let ratio = lambda / denom;
            // ln|1 - ratio^2| without cancellation: ln_1p for small ratio,
            // the factored form near the branch point, where
            // denom - lambda = nu^2 + (1 - lambda) stays exact
            let term = if ratio < 0.5 {
                (-ratio * ratio).ln_1p()
            } else {
                (nu * nu + (1.0 - lambda)).abs().ln() + (denom + lambda).ln() - 2.0 * denom.ln()
            };
            s += mult * term;
        }
        s
    };
    let quad = integrate_semi_infinite_with_breakpoints(integrand, &breakpoints, spec)?;
    let re = quad.value / (2.0 * std::f64::consts::PI);

    Ok(ComplexEnergy { re, im })
}

/// Separations below which vacuum-decay channels open.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    /// Longitudinal channel: `R₁ = (2α)^{1/3}`, i.e. `g = 1/2`.
    pub r1: f64,
    /// Transverse channels: `R₂ = α^{1/3}`, i.e. `g = 1`.
    pub r2: f64,
}

/// Physical separations `R₁ > R₂` at which the energy's imaginary part
/// switches on.
pub fn thresholds(p: &ModelParams) -> Thresholds {
    let alpha = p.polarizability();
    Thresholds { r1: (2.0 * alpha).cbrt(), r2: alpha.cbrt() }
}

/// Taylor coefficient of `g^order` in the normal-mode energy.
///
/// From `√(1+x) + √(1−x) − 2 = Σ_k 2 C(1/2, 2k) x^{2k}` and the channel
/// weights, the coefficient of `g^{2k}` is `C(1/2, 2k)·(2 + 4^k)`:
/// `c₂ = −3/4`, `c₄ = −45/64`, `c₆ = −693/512`, `c₈ = −55341/16384`.
/// Odd orders vanish by parity.
pub fn london_series_coefficients(order: u32) -> Result<f64, InstantaneousError> {
    if order % 2 == 1 {
        return Err(InstantaneousError::OddOrder(order));
    }
    match order {
        2 => Ok(-3.0 / 4.0),
        4 => Ok(-45.0 / 64.0),
        6 => Ok(-693.0 / 512.0),
        8 => Ok(-55341.0 / 16384.0),
        _ => Err(InstantaneousError::UnsupportedOrder(order)),
    }
}

fn check_coupling(g: f64) -> Result<(), InstantaneousError> {
    if !g.is_finite() || g < 0.0 {
        Err(InstantaneousError::NegativeCoupling(g))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn london_values() {
        assert_eq!(london_energy(0.0).unwrap(), 0.0);
        assert_eq!(london_energy(1.0).unwrap(), -0.75);
        assert!((london_energy(0.1).unwrap() + 7.5e-3).abs() < 1e-17);
        assert!(london_energy(-0.1).is_err());
    }

    #[test]
    fn normal_modes_boundary_cases() {
        let zero = exact_energy_normal_modes(0.0);
        assert_eq!(zero, ComplexEnergy::ZERO);

        // longitudinal channel exactly at threshold: still real
        let at = exact_energy_normal_modes(0.5);
        assert_eq!(at.im, 0.0);
        let expected = 0.5 * (2.0 * (1.5f64.sqrt() + 0.5f64.sqrt() - 2.0) + (2.0f64.sqrt() - 2.0));
        assert!((at.re - expected).abs() < 1e-15);

        // beyond threshold: imaginary part from the longitudinal channel only
        let beyond = exact_energy_normal_modes(0.75);
        assert!(beyond.im < 0.0);
        assert!((beyond.im + 0.5f64.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn tensor_is_traceless() {
        let t = DipoleCouplingTensor::new(0.37);
        assert_eq!(t.eigenvalues(), [-0.37, -0.37, 0.74]);
        assert!(t.trace().abs() < 1e-16);
    }

    #[test]
    fn correlator_basics() {
        let p = ModelParams::new(2.0, 1.0, 4.0, 1.0, 0.5).unwrap();
        let c = DipoleCorrelator::from_params(&p);
        assert_eq!(c.prefactor(), 0.5);
        assert_eq!(c.eval(1.3, 1.3), c.prefactor());
        assert_eq!(c.eval(0.2, 1.9), c.eval(1.9, 0.2));
    }

    #[test]
    fn threshold_formulas() {
        // alpha = 1 by choosing q^2 = 4 pi
        let q = (4.0 * std::f64::consts::PI).sqrt();
        let p = ModelParams::new(1.0, 1.0, 1.0, q, 1.0).unwrap();
        let t = thresholds(&p);
        assert!((t.r1 - 2.0f64.cbrt()).abs() < 1e-15);
        assert!((t.r2 - 1.0).abs() < 1e-15);
        assert!(t.r1 > t.r2);

        let unit = ModelParams::unit();
        let tu = thresholds(&unit);
        assert!((tu.r1 - (1.0 / (2.0 * std::f64::consts::PI)).cbrt()).abs() < 1e-15);
    }

    #[test]
    fn threshold_separation_iff_imaginary() {
        let p = ModelParams::unit();
        let t = thresholds(&p);
        for scale in [0.5, 0.9, 0.999, 1.001, 1.1, 2.0] {
            let sep = t.r1 * scale;
            let g = p.to_dimensionless(sep).unwrap().g();
            let e = exact_energy_normal_modes(g);
            if sep < t.r1 {
                assert!(e.im < 0.0, "expected decay at R = {sep}");
            } else {
                assert_eq!(e.im, 0.0, "expected real energy at R = {sep}");
            }
        }
    }

    #[test]
    fn series_coefficients() {
        assert_eq!(london_series_coefficients(2).unwrap(), -0.75);
        assert_eq!(london_series_coefficients(4).unwrap(), -45.0 / 64.0);
        assert_eq!(london_series_coefficients(6).unwrap(), -693.0 / 512.0);
        assert_eq!(london_series_coefficients(8).unwrap(), -55341.0 / 16384.0);
        assert!(matches!(london_series_coefficients(3), Err(InstantaneousError::OddOrder(3))));
        assert!(matches!(
            london_series_coefficients(10),
            Err(InstantaneousError::UnsupportedOrder(10))
        ));
    }

    #[test]
    fn spectral_matches_modes_below_threshold() {
        let spec = QuadratureSpec::default();
        assert_eq!(exact_energy_spectral(0.0, &spec).unwrap(), ComplexEnergy::ZERO);
        for &g in &[0.1, 0.4] {
            let s = exact_energy_spectral(g, &spec).unwrap();
            let m = exact_energy_normal_modes(g);
            assert!(
                (s.re - m.re).abs() <= 1e-10 * m.re.abs(),
                "g = {g}: spectral {} vs modes {}",
                s.re,
                m.re
            );
            assert_eq!(s.im, 0.0);
        }
        // frozen oracle value at g = 0.1
        let s = exact_energy_spectral(0.1, &spec).unwrap();
        assert!((s.re + 7.571_700_774_210_601e-3).abs() < 1e-13);
    }

    #[test]
    fn spectral_complex_branch() {
        let spec = QuadratureSpec::default();
        let s = exact_energy_spectral(0.75, &spec).unwrap();
        let m = exact_energy_normal_modes(0.75);
        assert!((s.im - m.im).abs() < 1e-12);
        assert!((s.re - m.re).abs() < 1e-8 * m.re.abs());
    }
}
