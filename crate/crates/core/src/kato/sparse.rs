//! Minimal compressed-sparse-row matrix for the Fock-space operators.

/// Real sparse matrix in CSR form. Rows hold column-sorted, merged entries.
#[derive(Debug, Clone)]
pub struct CsrMatrix {
    n: usize,
    indptr: Vec<usize>,
    indices: Vec<usize>,
    data: Vec<f64>,
}

impl CsrMatrix {
    /// Build from coordinate triplets; duplicate positions are summed and
    /// exact zeros dropped.
    pub fn from_triplets(n: usize, mut triplets: Vec<(usize, usize, f64)>) -> Self {
        triplets.sort_by_key(|t| (t.0, t.1));
        let mut indptr = vec![0usize; n + 1];
        let mut indices = Vec::with_capacity(triplets.len());
        let mut data: Vec<f64> = Vec::with_capacity(triplets.len());
        let mut last: Option<(usize, usize)> = None;
        for (r, c, v) in triplets {
            debug_assert!(r < n && c < n);
            if last == Some((r, c)) {
                *data.last_mut().expect("entry exists") += v;
            } else {
                indices.push(c);
                data.push(v);
                indptr[r + 1] += 1;
                last = Some((r, c));
            }
        }
        for r in 0..n {
            indptr[r + 1] += indptr[r];
        }
        // drop exact zeros produced by cancellation
        let mut out = Self { n, indptr: vec![0; n + 1], indices: Vec::new(), data: Vec::new() };
        for r in 0..n {
            for k in indptr[r]..indptr[r + 1] {
                if data[k] != 0.0 {
                    out.indices.push(indices[k]);
                    out.data.push(data[k]);
                    out.indptr[r + 1] += 1;
                }
            }
        }
        for r in 0..n {
            out.indptr[r + 1] += out.indptr[r];
        }
        out
    }

    pub fn zeros(n: usize) -> Self {
        Self { n, indptr: vec![0; n + 1], indices: Vec::new(), data: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn nnz(&self) -> usize {
        self.data.len()
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        let lo = self.indptr[row];
        let hi = self.indptr[row + 1];
        match self.indices[lo..hi].binary_search(&col) {
            Ok(k) => self.data[lo + k],
            Err(_) => 0.0,
        }
    }

    pub fn matvec(&self, x: &[f64], y: &mut [f64]) {
        debug_assert_eq!(x.len(), self.n);
        debug_assert_eq!(y.len(), self.n);
        for (r, out) in y.iter_mut().enumerate() {
            let mut acc = 0.0;
            for k in self.indptr[r]..self.indptr[r + 1] {
                acc += self.data[k] * x[self.indices[k]];
            }
            *out = acc;
        }
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.n];
        self.matvec(x, &mut y);
        y
    }

    /// True when every stored entry sits on the diagonal.
    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|r| (self.indptr[r]..self.indptr[r + 1]).all(|k| self.indices[k] == r))
    }

    /// Diagonal as a dense vector.
    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.n).map(|r| self.get(r, r)).collect()
    }

    /// Largest asymmetry `|A_ij − A_ji|` over stored entries.
    pub fn max_asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..self.n {
            for k in self.indptr[r]..self.indptr[r + 1] {
                let c = self.indices[k];
                worst = worst.max((self.data[k] - self.get(c, r)).abs());
            }
        }
        worst
    }

    pub fn iter_entries(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |r| {
            (self.indptr[r]..self.indptr[r + 1]).map(move |k| (r, self.indices[k], self.data[k]))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triplets_merge_and_sort() {
        let m = CsrMatrix::from_triplets(
            3,
            vec![(2, 0, 1.0), (0, 1, 2.0), (0, 1, 3.0), (1, 1, -4.0), (2, 2, 0.0)],
        );
        assert_eq!(m.get(0, 1), 5.0);
        assert_eq!(m.get(1, 1), -4.0);
        assert_eq!(m.get(2, 0), 1.0);
        assert_eq!(m.get(2, 2), 0.0);
        assert_eq!(m.nnz(), 3);
        assert!(!m.is_diagonal());
    }

    #[test]
    fn matvec_matches_dense() {
        let m = CsrMatrix::from_triplets(2, vec![(0, 0, 2.0), (0, 1, 1.0), (1, 0, 1.0)]);
        let y = m.apply(&[3.0, -1.0]);
        assert_eq!(y, vec![5.0, 3.0]);
        assert_eq!(m.max_asymmetry(), 0.0);
    }
}
