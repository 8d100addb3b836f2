//! Truncated multi-oscillator occupation bases and the operators on them.
//!
//! A [`FockSpace`] is the tensor product of `n_oscillators` single-mode
//! spaces, each truncated at occupation `n_max`. Basis enumeration is
//! lexicographic in the occupation tuple (the first oscillator varies
//! slowest), so index 0 is always the vacuum.

use crate::instantaneous::DipoleCouplingTensor;
use crate::kato::sparse::CsrMatrix;
use crate::kato::KatoError;

const MAX_DIMENSION: usize = 1_000_000;

/// Shape of a truncated occupation basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockSpace {
    n_oscillators: usize,
    n_max: usize,
    dimension: usize,
}

impl FockSpace {
    pub fn new(n_oscillators: usize, n_max: usize) -> Result<Self, KatoError> {
        if n_oscillators == 0 || n_max == 0 {
            return Err(KatoError::InvalidSpace {
                n_oscillators,
                n_max,
                reason: "need at least one oscillator and one excitation",
            });
        }
        let levels = n_max + 1;
        let mut dimension = 1usize;
        for _ in 0..n_oscillators {
            dimension = dimension.saturating_mul(levels);
            if dimension > MAX_DIMENSION {
                return Err(KatoError::InvalidSpace {
                    n_oscillators,
                    n_max,
                    reason: "dimension exceeds 1e6",
                });
            }
        }
        Ok(Self { n_oscillators, n_max, dimension })
    }

    pub fn n_oscillators(&self) -> usize {
        self.n_oscillators
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Occupation of oscillator `osc` in basis state `index`.
    pub fn occupation(&self, index: usize, osc: usize) -> usize {
        let levels = self.n_max + 1;
        let mut rem = index;
        for _ in osc + 1..self.n_oscillators {
            rem /= levels;
        }
        rem % levels
    }

    /// Stride of oscillator `osc` in the lexicographic enumeration.
    fn stride(&self, osc: usize) -> usize {
        (self.n_max + 1).pow((self.n_oscillators - 1 - osc) as u32)
    }

    pub fn index_of(&self, occupations: &[usize]) -> usize {
        debug_assert_eq!(occupations.len(), self.n_oscillators);
        occupations.iter().enumerate().map(|(osc, &n)| n * self.stride(osc)).sum()
    }
}

/// A linear operator on a [`FockSpace`], stored sparse.
#[derive(Debug, Clone)]
pub struct FockOperator {
    space: FockSpace,
    matrix: CsrMatrix,
}

impl FockOperator {
    pub fn new(space: FockSpace, matrix: CsrMatrix) -> Result<Self, KatoError> {
        if matrix.dim() != space.dimension() {
            return Err(KatoError::DimensionMismatch {
                expected: space.dimension(),
                got: matrix.dim(),
            });
        }
        Ok(Self { space, matrix })
    }

    pub fn space(&self) -> &FockSpace {
        &self.space
    }

    pub fn matrix(&self) -> &CsrMatrix {
        &self.matrix
    }

    pub fn element(&self, row: usize, col: usize) -> f64 {
        self.matrix.get(row, col)
    }

    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        self.matrix.apply(v)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.nnz() == 0
    }
}

/// Ladder operator `a` (annihilation) on one oscillator.
pub fn lowering_operator(space: FockSpace, osc: usize) -> FockOperator {
    ladder(space, osc, false)
}

/// Ladder operator `a†` (creation) on one oscillator; truncated at `n_max`.
pub fn raising_operator(space: FockSpace, osc: usize) -> FockOperator {
    ladder(space, osc, true)
}

fn ladder(space: FockSpace, osc: usize, raising: bool) -> FockOperator {
    assert!(osc < space.n_oscillators());
    let stride = space.stride(osc);
    let mut triplets = Vec::new();
    for col in 0..space.dimension() {
        let n = space.occupation(col, osc);
        if raising {
            if n < space.n_max() {
                triplets.push((col + stride, col, ((n + 1) as f64).sqrt()));
            }
        } else if n > 0 {
            triplets.push((col - stride, col, (n as f64).sqrt()));
        }
    }
    FockOperator { space, matrix: CsrMatrix::from_triplets(space.dimension(), triplets) }
}

/// Dimensionless position `x̃ = (a + a†)/√2` of one oscillator.
pub fn position_operator(space: FockSpace, osc: usize) -> FockOperator {
    assert!(osc < space.n_oscillators());
    let stride = space.stride(osc);
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let mut triplets = Vec::new();
    for col in 0..space.dimension() {
        let n = space.occupation(col, osc);
        if n < space.n_max() {
            triplets.push((col + stride, col, ((n + 1) as f64).sqrt() * inv_sqrt2));
        }
        if n > 0 {
            triplets.push((col - stride, col, (n as f64).sqrt() * inv_sqrt2));
        }
    }
    FockOperator { space, matrix: CsrMatrix::from_triplets(space.dimension(), triplets) }
}

/// Normal-ordered free Hamiltonian `Σᵢ a†ᵢaᵢ` in `ħΩ` units: diagonal total
/// occupation, vacuum eigenvalue exactly zero.
pub fn number_operator(space: FockSpace) -> FockOperator {
    let mut triplets = Vec::new();
    for idx in 0..space.dimension() {
        let total: usize = (0..space.n_oscillators()).map(|o| space.occupation(idx, o)).sum();
        if total > 0 {
            triplets.push((idx, idx, total as f64));
        }
    }
    FockOperator { space, matrix: CsrMatrix::from_triplets(space.dimension(), triplets) }
}

/// Bilinear product `coupling · x̃_a x̃_b` of two distinct oscillators,
/// assembled directly from the ladder amplitudes.
fn bilinear_coupling(
    space: FockSpace,
    osc_a: usize,
    osc_b: usize,
    coupling: f64,
    triplets: &mut Vec<(usize, usize, f64)>,
) {
    assert!(osc_a != osc_b);
    let stride_a = space.stride(osc_a);
    let stride_b = space.stride(osc_b);
    for col in 0..space.dimension() {
        let na = space.occupation(col, osc_a);
        let nb = space.occupation(col, osc_b);
        // (shift, amplitude) pairs for x~ acting on each factor
        let moves_a = ladder_moves(na, space.n_max(), stride_a);
        let moves_b = ladder_moves(nb, space.n_max(), stride_b);
        for &(da, ca) in moves_a.iter().flatten() {
            for &(db, cb) in moves_b.iter().flatten() {
                let row = (col as isize + da + db) as usize;
                triplets.push((row, col, coupling * ca * cb));
            }
        }
    }
}

fn ladder_moves(n: usize, n_max: usize, stride: usize) -> [Option<(isize, f64)>; 2] {
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let up = (n < n_max).then(|| (stride as isize, ((n + 1) as f64).sqrt() * inv_sqrt2));
    let down = (n > 0).then(|| (-(stride as isize), (n as f64).sqrt() * inv_sqrt2));
    [up, down]
}

/// One Cartesian channel of the coupled pair: two oscillators with
/// `H′ = g · x̃_A x̃_B` (energies in `ħΩ` units).
pub fn build_coupled_pair(g: f64, n_max: usize) -> Result<(FockOperator, FockOperator), KatoError> {
    if n_max < 2 {
        return Err(KatoError::TruncationTooSmall { n_max, required: 2 });
    }
    let space = FockSpace::new(2, n_max)?;
    let h0 = number_operator(space);
    let mut triplets = Vec::new();
    if g != 0.0 {
        bilinear_coupling(space, 0, 1, g, &mut triplets);
    }
    let hint =
        FockOperator { space, matrix: CsrMatrix::from_triplets(space.dimension(), triplets) };
    Ok((h0, hint))
}

/// The full three-channel pair: six oscillators (A then B, three Cartesian
/// components each) with `H′ = Σ_ch w_ch g · x̃_{A,ch} x̃_{B,ch}` and channel
/// weights `(−1, −1, +2)` from the dipole coupling tensor.
pub fn build_coupled_pair_3channel(
    g: f64,
    n_max: usize,
) -> Result<(FockOperator, FockOperator), KatoError> {
    if n_max < 2 {
        return Err(KatoError::TruncationTooSmall { n_max, required: 2 });
    }
    let space = FockSpace::new(6, n_max)?;
    let h0 = number_operator(space);
    let weights = DipoleCouplingTensor::new(g).eigenvalues();
    let mut triplets = Vec::new();
    if g != 0.0 {
        for (ch, &w) in weights.iter().enumerate() {
            bilinear_coupling(space, ch, 3 + ch, w, &mut triplets);
        }
    }
    let hint =
        FockOperator { space, matrix: CsrMatrix::from_triplets(space.dimension(), triplets) };
    Ok((h0, hint))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_is_lexicographic_and_stable() {
        let space = FockSpace::new(2, 3).unwrap();
        assert_eq!(space.dimension(), 16);
        assert_eq!(space.index_of(&[0, 0]), 0);
        assert_eq!(space.index_of(&[0, 1]), 1);
        assert_eq!(space.index_of(&[1, 0]), 4);
        assert_eq!(space.occupation(7, 0), 1);
        assert_eq!(space.occupation(7, 1), 3);
    }

    #[test]
    fn dimension_guard() {
        assert!(FockSpace::new(8, 9).is_err()); // 10^8 states
        assert!(FockSpace::new(0, 2).is_err());
    }

    #[test]
    fn commutator_on_interior_subspace() {
        // [a, a+] = 1 on states with occupation below n_max
        let space = FockSpace::new(2, 4).unwrap();
        for osc in 0..2 {
            let a = lowering_operator(space, osc);
            let adag = raising_operator(space, osc);
            for idx in 0..space.dimension() {
                if space.occupation(idx, osc) >= space.n_max() {
                    continue;
                }
                let mut e = vec![0.0; space.dimension()];
                e[idx] = 1.0;
                let forward = a.apply(&adag.apply(&e));
                let backward = adag.apply(&a.apply(&e));
                for j in 0..space.dimension() {
                    let expected = if j == idx { 1.0 } else { 0.0 };
                    assert!(
                        (forward[j] - backward[j] - expected).abs() < 1e-14,
                        "commutator defect at state {idx}, osc {osc}"
                    );
                }
            }
        }
    }

    #[test]
    fn position_operator_is_symmetric() {
        let space = FockSpace::new(2, 5).unwrap();
        let x = position_operator(space, 1);
        assert_eq!(x.matrix().max_asymmetry(), 0.0);
        // matrix element <1|x|0> = 1/sqrt(2)
        let one = space.index_of(&[0, 1]);
        assert!((x.element(one, 0) - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-16);
    }

    #[test]
    fn coupled_pair_elements() {
        let (h0, hint) = build_coupled_pair(0.3, 2).unwrap();
        assert_eq!(h0.element(0, 0), 0.0); // normal ordering
        assert!(h0.matrix().is_diagonal());
        let space = *h0.space();
        let one_one = space.index_of(&[1, 1]);
        assert!((hint.element(0, one_one) - 0.15).abs() < 1e-16); // g/2
        assert_eq!(hint.matrix().max_asymmetry(), 0.0);

        let (_, zero) = build_coupled_pair(0.0, 2).unwrap();
        assert!(zero.is_zero());

        assert!(build_coupled_pair(0.1, 1).is_err());
    }

    #[test]
    fn three_channel_weights() {
        let g = 0.2;
        let (h0, hint) = build_coupled_pair_3channel(g, 2).unwrap();
        let space = *h0.space();
        // <0| H' |1_ch A, 1_ch B> = w_ch g / 2
        for (ch, w) in [(0usize, -1.0), (1, -1.0), (2, 2.0)] {
            let mut occ = vec![0usize; 6];
            occ[ch] = 1;
            occ[3 + ch] = 1;
            let idx = space.index_of(&occ);
            assert!((hint.element(0, idx) - w * g / 2.0).abs() < 1e-16, "channel {ch} weight");
        }
    }
}
