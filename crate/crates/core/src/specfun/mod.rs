//! Special functions and numerical quadrature shared across the crate.
//!
//! * [`sine_integral`], [`cosine_integral`] — `Si(x)` and `Ci(x)` in double
//!   precision (absolute error below `1e-13` on the tested range);
//! * [`aux_f`], [`aux_g`] — the auxiliary combinations
//!   `f(x) = Ci(x)·sin(x) − (Si(x) − π/2)·cos(x)` and
//!   `g(x) = −[Ci(x)·cos(x) + (Si(x) − π/2)·sin(x)]`, which are smooth,
//!   positive and monotone for `x > 0`;
//! * [`integrate_finite`], [`integrate_semi_infinite`] — deterministic
//!   adaptive Gauss-Kronrod quadrature with strict error reporting.

mod quad;
mod sici;

pub use quad::{
    integrate_finite, integrate_semi_infinite, integrate_semi_infinite_with_breakpoints,
    QuadratureError, QuadratureResult, QuadratureSpec,
};
pub use sici::{aux_f, aux_g, aux_pair, cosine_integral, sine_integral, SpecFunError, EULER_GAMMA};
