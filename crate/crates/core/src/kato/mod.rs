//! Generic Rayleigh-Schrödinger vacuum-energy coefficients from the closed
//! resolvent formula, realized on truncated Fock spaces.
//!
//! For `H = H₀ + λ H′` with `H₀` diagonal and a nondegenerate zero ground
//! eigenvalue, the order-`n` coefficient of the ground energy follows from
//! the residue of the resolvent trace at the origin. Writing `P = |0⟩⟨0|`,
//! `Q = 1 − P`, `S⁰ = −P` and `Sᵏ = Q H₀⁻ᵏ Q`, the Laurent expansion of
//! `(z − H₀)⁻¹` around `z = 0` turns that residue into the closed cyclic sum
//!
//! ```text
//! E⁽ⁿ⁾ = (−1)ⁿ/n · Σ  Tr[ H′ S^(ν₁) H′ S^(ν₂) ⋯ H′ S^(νₙ) ]
//! ```
//!
//! over all compositions `ν₁ + ⋯ + νₙ = n − 1` of nonnegative integers —
//! `C(2n−2, n−1)` of them, enumerated by a stars-and-bars iterator. Every
//! composition contains a zero slot, so each trace collapses onto a vacuum
//! bracket: rotating the factors until a `S⁰ = −P` sits last gives
//! `Tr[⋯] = −⟨0| H′ S^(ν′₁) H′ ⋯ S^(ν′_{n−1}) H′ |0⟩`, which is evaluated
//! as a chain of sparse matrix-vector products. Resolvent powers are applied
//! as diagonal reciprocal powers, never by generic inversion.
//!
//! Projector insertions (`ν′ = 0` inside the bracket) factor the chain into
//! disconnected vacuum-to-vacuum pieces: these are the subtraction terms
//! that first appear at fourth order, where the formula reduces (for
//! `⟨0|H′|0⟩ = 0`) to
//!
//! ```text
//! E⁽⁴⁾ = ⟨0|H′ Ŝ¹ H′ Ŝ¹ H′ Ŝ¹ H′|0⟩ − ⟨0|H′ Ŝ¹ H′|0⟩⟨0|H′ Ŝ² H′|0⟩
//! ```
//!
//! with `Ŝᵏ = Q (E₀ − H₀)⁻ᵏ Q = (−1)ᵏ Sᵏ` the reduced resolvent powers at
//! the ground energy. [`verify_fourth_order_subtraction`] checks this
//! identity term by term.

mod fock;
mod sparse;

pub use fock::{
    build_coupled_pair, build_coupled_pair_3channel, lowering_operator, number_operator,
    position_operator, raising_operator, FockOperator, FockSpace,
};
pub use sparse::CsrMatrix;

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum KatoError {
    #[error("invalid Fock space ({n_oscillators} oscillators, n_max {n_max}): {reason}")]
    InvalidSpace { n_oscillators: usize, n_max: usize, reason: &'static str },
    #[error("operator dimension {got} does not match space dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("truncation n_max = {n_max} too small, need at least {required}")]
    TruncationTooSmall { n_max: usize, required: usize },
    #[error("H0 must be diagonal in the occupation basis")]
    NotDiagonal,
    #[error("H0 ground state invalid: {0}")]
    GroundStateInvalid(&'static str),
    #[error("perturbation order must be at least 1")]
    OrderTooSmall,
    #[error(
        "fourth-order identity violated: direct {direct:e}, \
         chained - subtraction {difference:e}"
    )]
    SubtractionIdentity { direct: f64, difference: f64 },
}

/// One term of the closed formula: a composition of `n − 1` over the `n`
/// cyclic resolvent slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KatoTerm {
    pub ks: Vec<usize>,
}

impl KatoTerm {
    pub fn order(&self) -> usize {
        self.ks.len()
    }

    pub fn total(&self) -> usize {
        self.ks.iter().sum()
    }

    /// Rotate the cyclic trace so a zero slot lands on the projector
    /// anchor, leaving the `n − 1` interior slots of the vacuum bracket.
    /// Every composition of `n − 1` into `n` parts has such a slot.
    pub fn bracket_slots(&self) -> Vec<usize> {
        let zero_at = self
            .ks
            .iter()
            .rposition(|&k| k == 0)
            .expect("composition of n-1 into n parts has a zero entry");
        let mut rotated = Vec::with_capacity(self.ks.len() - 1);
        rotated.extend_from_slice(&self.ks[zero_at + 1..]);
        rotated.extend_from_slice(&self.ks[..zero_at]);
        rotated
    }
}

/// The terms of the order-`n` coefficient, in enumeration order.
pub fn kato_terms(n: usize) -> impl Iterator<Item = KatoTerm> {
    Compositions::new(n - 1, n).map(|ks| KatoTerm { ks })
}

/// Stars-and-bars enumeration of the compositions of `total` into `parts`
/// nonnegative entries, in lexicographic order starting from
/// `(total, 0, …, 0)`.
pub struct Compositions {
    current: Option<Vec<usize>>,
}

impl Compositions {
    pub fn new(total: usize, parts: usize) -> Self {
        assert!(parts >= 1);
        let mut first = vec![0; parts];
        first[0] = total;
        Self { current: Some(first) }
    }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.current.take()?;
        let out = current.clone();
        // move one unit right of the rightmost positive entry that is not
        // in the last slot, collecting everything to its right
        let parts = current.len();
        let mut next = current;
        for i in (0..parts - 1).rev() {
            if next[i] > 0 {
                next[i] -= 1;
                let tail: usize = next[i + 1..].iter().sum();
                next[i + 1..].iter_mut().for_each(|v| *v = 0);
                next[i + 1] = tail + 1;
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Validated diagonal data of a free Hamiltonian: energies with a unique
/// zero ground entry and strictly positive excited entries.
struct GroundedDiagonal {
    energies: Vec<f64>,
    ground: usize,
}

fn grounded_diagonal(h0: &FockOperator) -> Result<GroundedDiagonal, KatoError> {
    if !h0.matrix().is_diagonal() {
        return Err(KatoError::NotDiagonal);
    }
    let energies = h0.matrix().diagonal();
    let mut ground = None;
    for (i, &e) in energies.iter().enumerate() {
        if e == 0.0 {
            if ground.is_some() {
                return Err(KatoError::GroundStateInvalid("zero eigenvalue is degenerate"));
            }
            ground = Some(i);
        } else if e < 0.0 {
            return Err(KatoError::GroundStateInvalid("negative excited eigenvalue"));
        }
    }
    let ground =
        ground.ok_or(KatoError::GroundStateInvalid("no zero eigenvalue (not normal-ordered)"))?;
    Ok(GroundedDiagonal { energies, ground })
}

/// The operator `Sᵏ` of the Laurent expansion: `S⁰ = −P` and, for `k ≥ 1`,
/// the diagonal operator with entries `1/Eᵢᵏ` on excited states and zero on
/// the vacuum.
pub fn s_operator(h0: &FockOperator, k: usize) -> Result<FockOperator, KatoError> {
    let diag = grounded_diagonal(h0)?;
    let mut triplets = Vec::new();
    if k == 0 {
        triplets.push((diag.ground, diag.ground, -1.0));
    } else {
        for (i, &e) in diag.energies.iter().enumerate() {
            if i != diag.ground {
                triplets.push((i, i, e.powi(-(k as i32))));
            }
        }
    }
    FockOperator::new(*h0.space(), CsrMatrix::from_triplets(h0.space().dimension(), triplets))
}

/// Vacuum bracket `⟨0| H′ S^{k₁} H′ ⋯ S^{k_{m}} H′ |0⟩` with the slots
/// applied as diagonal scalings (`k = 0` inserts `−P`).
fn bracket(diag: &GroundedDiagonal, hint: &FockOperator, ks: &[usize]) -> f64 {
    let dim = diag.energies.len();
    let mut v = vec![0.0; dim];
    v[diag.ground] = 1.0;
    v = hint.apply(&v);
    for &k in ks.iter().rev() {
        if k == 0 {
            let amp = -v[diag.ground];
            v.iter_mut().for_each(|x| *x = 0.0);
            v[diag.ground] = amp;
        } else {
            for (i, x) in v.iter_mut().enumerate() {
                if i == diag.ground {
                    *x = 0.0;
                } else {
                    *x /= diag.energies[i].powi(k as i32);
                }
            }
        }
        v = hint.apply(&v);
    }
    v[diag.ground]
}

/// Signed bracket using the reduced resolvent of `E₀ − H₀`:
/// `Ŝᵏ = (−1)ᵏ Sᵏ`, `Ŝ⁰ = −P`.
fn bracket_signed(diag: &GroundedDiagonal, hint: &FockOperator, ks: &[usize]) -> f64 {
    let parity = ks.iter().sum::<usize>() % 2;
    let sign = if parity == 1 { -1.0 } else { 1.0 };
    sign * bracket(diag, hint, ks)
}

/// Order-`n` vacuum-energy coefficient `E⁽ⁿ⁾` (in the energy units of the
/// operators) from the closed cyclic formula.
///
/// Compositions are enumerated exhaustively and each trace term is
/// accumulated in enumeration order, so the result is deterministic.
pub fn kato_energy_coefficient(
    h0: &FockOperator,
    hint: &FockOperator,
    n: usize,
) -> Result<f64, KatoError> {
    if n == 0 {
        return Err(KatoError::OrderTooSmall);
    }
    if h0.space() != hint.space() {
        return Err(KatoError::DimensionMismatch {
            expected: h0.space().dimension(),
            got: hint.space().dimension(),
        });
    }
    let diag = grounded_diagonal(h0)?;

    let mut sum = 0.0;
    for term in kato_terms(n) {
        sum += bracket(&diag, hint, &term.bracket_slots());
    }

    let sign = if n.is_multiple_of(2) { -1.0 } else { 1.0 }; // (-1)^(n+1)
    Ok(sign * sum / n as f64)
}

/// The three pieces of the fourth-order identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourthOrderCheck {
    /// `E⁽⁴⁾` from [`kato_energy_coefficient`].
    pub direct: f64,
    /// `⟨0|H′ Ŝ¹ H′ Ŝ¹ H′ Ŝ¹ H′|0⟩`.
    pub chained: f64,
    /// `⟨0|H′ Ŝ¹ H′|0⟩ · ⟨0|H′ Ŝ² H′|0⟩`.
    pub subtraction: f64,
}

/// Computes the chained fourth-order term, the disconnected subtraction
/// product, and the direct coefficient, and checks
/// `direct = chained − subtraction` to `1e-12` (valid for couplings with
/// `⟨0|H′|0⟩ = 0`, as produced by the pair builders).
pub fn verify_fourth_order_subtraction(
    h0: &FockOperator,
    hint: &FockOperator,
) -> Result<FourthOrderCheck, KatoError> {
    if h0.space().n_max() < 4 {
        return Err(KatoError::TruncationTooSmall { n_max: h0.space().n_max(), required: 4 });
    }
    let diag = grounded_diagonal(h0)?;
    let chained = bracket_signed(&diag, hint, &[1, 1, 1]);
    let subtraction = bracket_signed(&diag, hint, &[1]) * bracket_signed(&diag, hint, &[2]);
    let direct = kato_energy_coefficient(h0, hint, 4)?;

    let difference = chained - subtraction;
    let scale = direct.abs().max(1.0);
    if (direct - difference).abs() > 1e-12 * scale {
        return Err(KatoError::SubtractionIdentity { direct, difference });
    }
    Ok(FourthOrderCheck { direct, chained, subtraction })
}
