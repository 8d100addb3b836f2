//! Sine and cosine integrals and their auxiliary functions.
//!
//! Two evaluation branches, switching at `x = 4`:
//!
//! * `x ≤ 4`: the defining Maclaurin series
//!   `Si(x) = Σ (−1)ᵏ x^{2k+1} / ((2k+1)(2k+1)!)` and
//!   `Ci(x) = γ + ln x + Σ_{k≥1} (−1)ᵏ x^{2k} / (2k (2k)!)`,
//!   summed to machine convergence; the auxiliary pair is assembled from
//!   these.
//! * `x > 4`: the auxiliary functions come from the continued fraction for
//!   the exponential integral on the imaginary axis,
//!   `e^{ix} E₁(ix) = g(x) − i f(x)`, evaluated with the modified Lentz
//!   algorithm on the even-contracted fraction
//!   `1/(z+1− 1²/(z+3− 2²/(z+5− …)))` at `z = ix`. `Si` and `Ci` are then
//!   reconstructed through
//!   `Si(x) = π/2 − f·cos x − g·sin x`, `Ci(x) = f·sin x − g·cos x`.
//!
//! Both branches deliver better than `1e-13` absolute error on the switch
//! region, which the tests verify by direct overlap comparison.

use num_complex::Complex64;
use thiserror::Error;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Series/continued-fraction switch point.
const BRANCH_SPLIT: f64 = 4.0;

const LENTZ_MAX_ITERS: usize = 300;

#[derive(Debug, Error, PartialEq)]
pub enum SpecFunError {
    #[error("argument must be finite, got {0}")]
    NonFinite(f64),
    #[error("argument {value} outside domain ({requirement})")]
    OutOfDomain { value: f64, requirement: &'static str },
    #[error("continued fraction failed to converge at x = {0}")]
    NoConvergence(f64),
}

/// `Si(x) = ∫₀ˣ sin t / t dt` for `x ≥ 0`.
pub fn sine_integral(x: f64) -> Result<f64, SpecFunError> {
    if !x.is_finite() {
        return Err(SpecFunError::NonFinite(x));
    }
    if x < 0.0 {
        return Err(SpecFunError::OutOfDomain { value: x, requirement: "x >= 0" });
    }
    if x <= BRANCH_SPLIT {
        Ok(si_series(x))
    } else {
        let (f, g) = aux_fg_cf(x)?;
        Ok(std::f64::consts::FRAC_PI_2 - f * x.cos() - g * x.sin())
    }
}

/// `Ci(x) = γ + ln x + ∫₀ˣ (cos t − 1)/t dt` for `x > 0`.
///
/// Diverges logarithmically as `x → 0⁺`, so nonpositive arguments are a
/// domain error.
pub fn cosine_integral(x: f64) -> Result<f64, SpecFunError> {
    if !x.is_finite() {
        return Err(SpecFunError::NonFinite(x));
    }
    if x <= 0.0 {
        return Err(SpecFunError::OutOfDomain { value: x, requirement: "x > 0" });
    }
    if x <= BRANCH_SPLIT {
        Ok(EULER_GAMMA + x.ln() + ci_series_sum(x))
    } else {
        let (f, g) = aux_fg_cf(x)?;
        Ok(f * x.sin() - g * x.cos())
    }
}

/// Auxiliary function `f(x) = Ci(x)·sin(x) − (Si(x) − π/2)·cos(x)`.
///
/// Behaves as `π/2 − x(1 − γ − ln x) + …` near zero and as `1/x` at
/// infinity.
pub fn aux_f(x: f64) -> Result<f64, SpecFunError> {
    Ok(aux_pair(x)?.0)
}

/// Auxiliary function `g(x) = −[Ci(x)·cos(x) + (Si(x) − π/2)·sin(x)]`.
///
/// Diverges as `−γ − ln x` at zero (callers must keep `x > 0`) and decays
/// as `1/x²` at infinity.
pub fn aux_g(x: f64) -> Result<f64, SpecFunError> {
    Ok(aux_pair(x)?.1)
}

/// Both auxiliary functions at once; saves a continued-fraction evaluation
/// when the caller needs the pair.
pub fn aux_pair(x: f64) -> Result<(f64, f64), SpecFunError> {
    if !x.is_finite() {
        return Err(SpecFunError::NonFinite(x));
    }
    if x <= 0.0 {
        return Err(SpecFunError::OutOfDomain { value: x, requirement: "x > 0" });
    }
    if x <= BRANCH_SPLIT {
        let si_shift = si_series(x) - std::f64::consts::FRAC_PI_2;
        let ci = EULER_GAMMA + x.ln() + ci_series_sum(x);
        let (s, c) = x.sin_cos();
        Ok((ci * s - si_shift * c, -(ci * c + si_shift * s)))
    } else {
        aux_fg_cf(x)
    }
}

fn si_series(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    let mut k = 0u32;
    loop {
        // term_{k+1} = term_k * (-x^2) (2k+1) / ((2k+2)(2k+3)^2)
        let a = (2 * k + 1) as f64;
        let b = (2 * k + 2) as f64;
        let c = (2 * k + 3) as f64;
        term *= -x2 * a / (b * c * c);
        sum += term;
        k += 1;
        if term.abs() < 1e-18 * sum.abs() || k > 60 {
            return sum;
        }
    }
}

/// The entire part of the Ci series, `Σ_{k≥1} (−1)ᵏ x^{2k}/(2k(2k)!)`.
fn ci_series_sum(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = -x2 / 4.0;
    let mut sum = term;
    let mut k = 1u32;
    loop {
        // term_{k+1} = term_k * (-x^2) (2k) / ((2k+1)(2k+2)^2)
        let a = (2 * k) as f64;
        let b = (2 * k + 1) as f64;
        let c = (2 * k + 2) as f64;
        term *= -x2 * a / (b * c * c);
        sum += term;
        k += 1;
        if term.abs() < 1e-18 * sum.abs().max(1e-300) || k > 60 {
            return sum;
        }
    }
}

/// Modified Lentz evaluation of `e^{ix} E₁(ix) = g(x) − i f(x)`.
fn aux_fg_cf(x: f64) -> Result<(f64, f64), SpecFunError> {
    let z = Complex64::new(0.0, x);
    let mut b = z + 1.0;
    let mut c = Complex64::new(1e308, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 2..=LENTZ_MAX_ITERS {
        let a = -(((i - 1) * (i - 1)) as f64);
        b += 2.0;
        d = (d * a + b).inv();
        c = b + a / c;
        let delta = c * d;
        h *= delta;
        if (delta.re - 1.0).abs() + delta.im.abs() < 1e-16 {
            return Ok((-h.im, h.re));
        }
    }
    Err(SpecFunError::NoConvergence(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn si_at_zero_and_limit() {
        assert_eq!(sine_integral(0.0).unwrap(), 0.0);
        assert!((sine_integral(1e6).unwrap() - FRAC_PI_2).abs() < 1e-5);
    }

    #[test]
    fn si_at_pi() {
        // reference value of the Gibbs overshoot maximum
        assert!((sine_integral(PI).unwrap() - 1.851_937_051_982_466_2).abs() < 1e-13);
    }

    #[test]
    fn ci_small_argument_expansion() {
        for &x in &[1e-8, 3e-8, 1e-7] {
            let ci = cosine_integral(x).unwrap();
            assert!((ci - x.ln() - EULER_GAMMA).abs() < 1e-7);
        }
    }

    #[test]
    fn ci_reference_and_decay() {
        assert!((cosine_integral(1.0).unwrap() - 0.337_403_922_900_968_13).abs() < 1e-13);
        assert!(cosine_integral(1e6).unwrap().abs() < 1e-5);
    }

    #[test]
    fn aux_limits() {
        // f -> pi/2 as x -> 0+
        assert!((aux_f(1e-10).unwrap() - FRAC_PI_2).abs() < 1e-8);
        // g + ln x -> -gamma as x -> 0+
        assert!((aux_g(1e-8).unwrap() + (1e-8f64).ln() + EULER_GAMMA).abs() < 1e-6);
        // x f(x) -> 1, x^2 g(x) -> 1
        assert!((1e3 * aux_f(1e3).unwrap() - 1.0).abs() < 1e-2);
        assert!((1e6 * aux_g(1e3).unwrap() - 1.0).abs() < 1e-2);
    }

    #[test]
    fn branch_overlap_agreement() {
        // Both branches are accurate on [3, 6]; they must agree to 1e-12.
        let mut x = 3.0;
        while x <= 6.0 {
            let si_shift = si_series(x) - FRAC_PI_2;
            let ci = EULER_GAMMA + x.ln() + ci_series_sum(x);
            let (s, c) = x.sin_cos();
            let f_series = ci * s - si_shift * c;
            let g_series = -(ci * c + si_shift * s);
            let (f_cf, g_cf) = aux_fg_cf(x).unwrap();
            assert!((f_series - f_cf).abs() < 1e-12, "f mismatch at x = {x}");
            assert!((g_series - g_cf).abs() < 1e-12, "g mismatch at x = {x}");
            x += 0.25;
        }
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(sine_integral(f64::NAN), Err(SpecFunError::NonFinite(_))));
        assert!(sine_integral(-1.0).is_err());
        assert!(cosine_integral(0.0).is_err());
        assert!(cosine_integral(-3.0).is_err());
        assert!(aux_f(0.0).is_err());
        assert!(aux_g(-1e-9).is_err());
    }

    #[test]
    fn si_monotone_up_to_pi() {
        let mut prev = 0.0;
        for i in 1..=64 {
            let x = PI * i as f64 / 64.0;
            let v = sine_integral(x).unwrap();
            assert!(v > prev, "Si not monotone at x = {x}");
            prev = v;
        }
    }
}
