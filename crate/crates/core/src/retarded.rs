//! Fourth-order interaction energy with retardation: the London to
//! Casimir-Polder crossover.
//!
//! Everything is computed in the internal convention `ħ = Ω = c = 1`, with
//! the separation entering through `r = ΩR/c`. Public energies are returned
//! in the crossover normalization `−E·r⁶/A²` in units of `ħΩ`, where
//! `A = q²Ω/(4πm) = αΩ³`; [`e4_energy_physical`] restores dimensions.
//! The normalization is anchored analytically at both ends: the curve tends
//! to `3/4` (London) as `r → 0` and to `23/(4πr)` (Casimir-Polder) as
//! `r → ∞`.
//!
//! # The electric-field correlator
//!
//! The frequency-resolved field correlator is obtained by applying
//! `(δⁱʲ∇² − ∂ⁱ∂ʲ)` to the kernel `G(R) = e^{−|ν|R}/(4πR)` and dropping the
//! contact (delta-function) term, which never contributes at nonzero
//! separation. With `u = |ν|`, `G′ = −(u + 1/R)·G` and
//! `G″ = (u² + 2u/R + 2/R²)·G`, so
//!
//! ```text
//! ∂ⁱ∂ʲ G = (G″ − G′/R)·R̂ⁱR̂ʲ + (G′/R)·δⁱʲ
//! Ĩⁱʲ    = δⁱʲ(u²G − G′/R) − R̂ⁱR̂ʲ(G″ − G′/R)
//!        = G·[ δⁱʲ(u² + u/R + 1/R²) − R̂ⁱR̂ʲ(u² + 3u/R + 3/R²) ]
//! ```
//!
//! In the frame with `R` along an axis the tensor has two independent
//! components,
//!
//! ```text
//! longitudinal  L(R,ν) = −e^{−uR}(1 + uR) / (2πR³)
//! transverse    T(R,ν) = +e^{−uR}(1 + uR + u²R²) / (4πR³)
//! ```
//!
//! reducing at `ν = 0` to the static dipole kernel `(δⁱʲ/R³ − 3RⁱRʲ/R⁵)/4π`
//! with self-contraction `ΣᵢⱼĨⁱʲĨⁱʲ = 6/(4π)²R⁶`.
//!
//! # Three routes to the energy
//!
//! 1. **Tensor route** ([`e4_energy_tensor`]): quadrature of
//!    `−½ ∫ dν/2π Σᵢⱼ (M̃(ν) Ĩⁱʲ(R,ν))²` built literally from
//!    [`field_correlator`] and the dipole spectral function
//!    `M̃ ∝ 1/(ν²+1)`.
//! 2. **Reduced route** ([`e4_energy_reduced`]): quadrature of the
//!    equivalent one-dimensional form with integrand
//!    `(ν⁴+2ν³+5ν²+6ν+3) e^{−2ν} / (ν²+r²)²`.
//! 3. **Closed form** ([`e4_energy_closed`]): the exact expression in the
//!    auxiliary sine/cosine-integral functions,
//!    `B(r) = r(6−r²) + (3−7r²+r⁴)f(2r) + 2r(3−3r²+r⁴)g(2r)`,
//!    with the crossover curve equal to `B(r)/2π`. For large `r` the direct
//!    expression cancels catastrophically (the `r³` and `r` pieces cancel
//!    against the expansions of `f` and `g`), so beyond `r = 25` the bracket
//!    is evaluated from its exact asymptotic expansion
//!    `B ~ Σ b_k r^{−(2k+1)}` instead, with the polynomial cancellations
//!    performed symbolically once and the coefficients frozen below.

use std::f64::consts::PI;

use thiserror::Error;

use crate::specfun::{
    aux_pair, integrate_semi_infinite, QuadratureError, QuadratureSpec, SpecFunError,
};
use crate::units::ModelParams;

#[derive(Debug, Error, PartialEq)]
pub enum RetardedError {
    #[error("separation must be finite and strictly positive, got {0}")]
    NonPositiveSeparation(f64),
    #[error("coupling must be finite and nonnegative, got {0}")]
    NegativeCoupling(f64),
    #[error("invalid grid: {0}")]
    InvalidGrid(&'static str),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

/// Dipole spectral function `M̃(ν) = (q²/m)/(ν² + Ω²)`.
#[derive(Debug, Clone, Copy)]
pub struct SpectralCorrelatorM {
    charge_sq_over_mass: f64,
    omega: f64,
}

impl SpectralCorrelatorM {
    pub fn from_params(p: &ModelParams) -> Self {
        Self { charge_sq_over_mass: p.charge() * p.charge() / p.mass(), omega: p.omega() }
    }

    pub fn eval(&self, nu: f64) -> f64 {
        self.charge_sq_over_mass / (nu * nu + self.omega * self.omega)
    }

    /// Dimensionless profile `1/(ν̃² + 1)` with `ν̃ = ν/Ω`; the prefactor is
    /// folded into the energy normalization.
    pub fn profile(nu: f64) -> f64 {
        1.0 / (nu * nu + 1.0)
    }
}

/// The two independent components of the field correlator `Ĩⁱʲ(R, ν)` in
/// the frame with the separation along an axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralTensor3 {
    pub longitudinal: f64,
    pub transverse: f64,
}

impl SpectralTensor3 {
    /// `Σᵢⱼ ĨⁱʲĨⁱʲ = L² + 2T²`.
    pub fn self_contraction(&self) -> f64 {
        self.longitudinal * self.longitudinal + 2.0 * self.transverse * self.transverse
    }

    /// `Σᵢ Ĩⁱⁱ = L + 2T`; vanishes at `ν = 0` away from the origin.
    pub fn trace(&self) -> f64 {
        self.longitudinal + 2.0 * self.transverse
    }
}

/// Closed-form field correlator components (derivation in the module docs).
/// Units `c = 1`: `r_sep` is a length and `nu` an angular frequency.
pub fn field_correlator(r_sep: f64, nu: f64) -> Result<SpectralTensor3, RetardedError> {
    if !r_sep.is_finite() || r_sep <= 0.0 {
        return Err(RetardedError::NonPositiveSeparation(r_sep));
    }
    let u = nu.abs();
    let ur = u * r_sep;
    let damp = (-ur).exp();
    let r3 = r_sep * r_sep * r_sep;
    Ok(SpectralTensor3 {
        longitudinal: -damp * (1.0 + ur) / (2.0 * PI * r3),
        transverse: damp * (1.0 + ur + ur * ur) / (4.0 * PI * r3),
    })
}

/// Integrand of the tensor route in the crossover normalization:
/// `(4π)² M̃²(ν) [L² + 2T²] r⁶`, so that the curve is `1/2π` times its
/// integral over `ν ∈ [0, ∞)`. Equals `6` at `ν = 0` for every `r`.
pub fn tensor_integrand(nu: f64, r: f64) -> f64 {
    let m = SpectralCorrelatorM::profile(nu);
    let tensor = field_correlator(r, nu).expect("r > 0 checked by caller");
    let four_pi = 4.0 * PI;
    four_pi * four_pi * m * m * tensor.self_contraction() * r.powi(6)
}

/// Crossover curve `−E·r⁶/A²` by quadrature of the frequency-domain tensor
/// contraction.
pub fn e4_energy_tensor(r: f64, spec: &QuadratureSpec) -> Result<f64, RetardedError> {
    check_separation(r)?;
    let quad = integrate_semi_infinite(|nu| tensor_integrand(nu, r), spec)?;
    Ok(quad.value / (2.0 * PI))
}

/// Integrand of the reduced one-dimensional route:
/// `(ν⁴ + 2ν³ + 5ν² + 6ν + 3) e^{−2ν} / (ν² + r²)²`.
pub fn reduced_integrand(nu: f64, r: f64) -> f64 {
    let poly = (((nu + 2.0) * nu + 5.0) * nu + 6.0) * nu + 3.0;
    let denom = nu * nu + r * r;
    poly * (-2.0 * nu).exp() / (denom * denom)
}

/// Crossover curve `−E·r⁶/A²` by quadrature of the reduced integral,
/// `(r³/π) ∫₀^∞ dν (ν⁴+2ν³+5ν²+6ν+3) e^{−2ν}/(ν²+r²)²`.
pub fn e4_energy_reduced(r: f64, spec: &QuadratureSpec) -> Result<f64, RetardedError> {
    check_separation(r)?;
    let quad = integrate_semi_infinite(|nu| reduced_integrand(nu, r), spec)?;
    Ok(r.powi(3) * quad.value / PI)
}

/// Switch from the sine/cosine-integral expression to its exact asymptotic
/// resummation; chosen so both branches are accurate to better than 1e-11
/// in the overlap region.
const BRACKET_ASYM_SWITCH: f64 = 25.0;

/// Laurent coefficients `b_k` of `B(r) ~ Σ b_k / r^{2k+1}`, obtained by
/// inserting the auxiliary-function expansions
/// `f(2r) ~ Σ (−1)ᵏ(2k)!/(2r)^{2k+1}`, `g(2r) ~ Σ (−1)ᵏ(2k+1)!/(2r)^{2k+2}`
/// into the bracket and cancelling the polynomial parts exactly:
/// `b₀ = 23/2`, `b₁ = −129/2`, `b₂ = 1917/2`, `b₃ = −24075`, …
#[allow(clippy::excessive_precision)]
const BRACKET_ASYM: [f64; 16] = [
    11.5,
    -64.5,
    958.5,
    -24_075.0,
    891_843.75,
    -45_321_018.75,
    3_014_108_212.5,
    -253_617_313_950.0,
    26_312_317_437_656.25,
    -3_297_731_436_217_968.75,
    4.910_207_930_454_389e17,
    -8.565_904_823_058_74e19,
    1.730_282_465_419_423_7e22,
    -4.006_210_507_493_406_9e24,
    1.053_906_585_891_579_4e27,
    -3.125_854_904_262_321_9e29,
];

fn bracket_direct(r: f64) -> Result<f64, RetardedError> {
    let (f, g) = aux_pair(2.0 * r)?;
    let r2 = r * r;
    let r4 = r2 * r2;
    Ok(r * (6.0 - r2) + (3.0 - 7.0 * r2 + r4) * f + 2.0 * r * (3.0 - 3.0 * r2 + r4) * g)
}

fn bracket_asymptotic(r: f64) -> f64 {
    let inv_r2 = 1.0 / (r * r);
    let mut power = 1.0 / r;
    let mut sum = 0.0;
    let mut prev = f64::INFINITY;
    for &b in &BRACKET_ASYM {
        let term = b * power;
        if term.abs() >= prev {
            break; // divergent tail reached
        }
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
        prev = term.abs();
        power *= inv_r2;
    }
    sum
}

/// Crossover curve `−E·r⁶/A²` from the exact closed form, `B(r)/2π`.
pub fn e4_energy_closed(r: f64) -> Result<f64, RetardedError> {
    check_separation(r)?;
    let bracket = if r <= BRACKET_ASYM_SWITCH { bracket_direct(r)? } else { bracket_asymptotic(r) };
    Ok(bracket / (2.0 * PI))
}

/// Interaction energy with its physical dimensions restored:
/// `E(R) = −(ħΩ/2π) (αΩ³/c³)² B(r)/r⁶` with `r = ΩR/c`.
pub fn e4_energy_physical(p: &ModelParams, separation: f64) -> Result<f64, RetardedError> {
    let r = p
        .to_dimensionless(separation)
        .map_err(|_| RetardedError::NonPositiveSeparation(separation))?
        .r();
    let curve = e4_energy_closed(r)?;
    let amp = p.amplitude() / p.c().powi(3);
    Ok(-p.energy_scale() * curve * amp * amp / r.powi(6))
}

/// Short-distance plateau of the crossover curve (the London constant).
pub fn asymptote_london() -> f64 {
    0.75
}

/// Long-distance constant of `−E·r⁷/A²` (the Casimir-Polder constant).
pub fn asymptote_casimir_polder() -> f64 {
    23.0 / (4.0 * PI)
}

/// Ratio of the Casimir-Polder to the London asymptote at separation `r`:
/// `(23/3π)/r`. The two asymptotes cross at `r = 23/3π`.
pub fn cp_over_london_ratio(r: f64) -> f64 {
    23.0 / (3.0 * PI * r)
}

/// Sampled crossover curve with its logarithmic slope.
#[derive(Debug, Clone)]
pub struct CrossoverCurve {
    /// Strictly increasing, log-uniform separations.
    pub grid: Vec<f64>,
    /// `−E·r⁶/A²` at each grid point.
    pub energy: Vec<f64>,
    /// `d log(−E·r⁶) / d log r`; interpolates from 0 (pure `r⁻⁶`) to −1
    /// (pure `r⁻⁷`).
    pub slope: Vec<f64>,
}

/// Evaluate the closed-form curve on a log-uniform grid and differentiate
/// its logarithm with centered stencils (one-sided at the endpoints).
pub fn crossover_curve(
    r_min: f64,
    r_max: f64,
    points: usize,
) -> Result<CrossoverCurve, RetardedError> {
    if !(r_min.is_finite() && r_max.is_finite()) || r_min <= 0.0 || r_min >= r_max {
        return Err(RetardedError::InvalidGrid("need 0 < r_min < r_max"));
    }
    if points < 8 {
        return Err(RetardedError::InvalidGrid("need at least 8 points"));
    }
    let grid = log_grid(r_min, r_max, points);
    let energy = grid.iter().map(|&r| e4_energy_closed(r)).collect::<Result<Vec<_>, _>>()?;
    let slope = log_slope(&grid, &energy)?;
    Ok(CrossoverCurve { grid, energy, slope })
}

/// Log-uniform grid, endpoints included.
pub fn log_grid(r_min: f64, r_max: f64, points: usize) -> Vec<f64> {
    if points == 1 {
        return vec![r_min];
    }
    let (la, lb) = (r_min.ln(), r_max.ln());
    let step = (lb - la) / (points - 1) as f64;
    (0..points)
        .map(|i| match i {
            0 => r_min,
            i if i == points - 1 => r_max,
            i => (la + step * i as f64).exp(),
        })
        .collect()
}

/// Second-order finite-difference slope of `ln(values)` against `ln(grid)`
/// on a log-uniform grid; needs at least 3 points.
pub fn log_slope(grid: &[f64], values: &[f64]) -> Result<Vec<f64>, RetardedError> {
    if grid.len() != values.len() || grid.len() < 3 {
        return Err(RetardedError::InvalidGrid("slope needs at least 3 points"));
    }
    if values.iter().any(|&v| v <= 0.0) {
        return Err(RetardedError::InvalidGrid("slope needs positive values"));
    }
    let n = grid.len();
    let h = (grid[1] / grid[0]).ln();
    let y: Vec<f64> = values.iter().map(|v| v.ln()).collect();
    let mut slope = Vec::with_capacity(n);
    slope.push((-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * h));
    for i in 1..n - 1 {
        slope.push((y[i + 1] - y[i - 1]) / (2.0 * h));
    }
    slope.push((3.0 * y[n - 1] - 4.0 * y[n - 2] + y[n - 3]) / (2.0 * h));
    Ok(slope)
}

/// Instantaneous-limit consistency path: replace the field correlator by
/// `Ĩⁱʲ(R,0)·δ(τ−τ′)` in the frequency-domain energy. The energy collapses
/// to `−½ Σᵢⱼ(Ĩⁱʲ(R,0))² ∫ dν/2π M̃²(ν)`, which must reproduce the London
/// energy `−(3/4)g²` in `ħΩ` units. Returned for the given coupling `g`,
/// with the frequency integral done by quadrature.
pub fn replacement_london_energy(g: f64, spec: &QuadratureSpec) -> Result<f64, RetardedError> {
    if !g.is_finite() || g < 0.0 {
        return Err(RetardedError::NegativeCoupling(g));
    }
    // work at R = 1, Omega = 1; then alpha = g and q^2/m = 4 pi g
    let static_tensor = field_correlator(1.0, 0.0)?;
    let contraction = static_tensor.self_contraction(); // 6/(4 pi)^2
    let m_prefactor = 4.0 * PI * g;
    let quad = integrate_semi_infinite(
        |nu| {
            let m = SpectralCorrelatorM::profile(nu);
            m * m
        },
        spec,
    )?;
    // even integrand: full-line integral is twice the half-line one
    Ok(-0.5 * m_prefactor * m_prefactor * contraction * 2.0 * quad.value / (2.0 * PI))
}

fn check_separation(r: f64) -> Result<(), RetardedError> {
    if !r.is_finite() || r <= 0.0 {
        Err(RetardedError::NonPositiveSeparation(r))
    } else {
        Ok(())
    }
}
