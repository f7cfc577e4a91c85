//! Exact linear algebra over the rationals: reduced row echelon form,
//! rank, kernel bases and span membership.

use num_traits::{One, Zero};

use crate::poly::Rat;

/// Dense rational matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMat {
    pub rows: Vec<Vec<Rat>>,
    pub ncols: usize,
}

impl QMat {
    pub fn new(rows: Vec<Vec<Rat>>, ncols: usize) -> Self {
        for r in &rows {
            assert_eq!(r.len(), ncols);
        }
        QMat { rows, ncols }
    }

    pub fn zero(nrows: usize, ncols: usize) -> Self {
        QMat {
            rows: vec![vec![Rat::zero(); ncols]; nrows],
            ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.rows[i][i] = Rat::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    /// Deterministic: pivots are the first nonzero entries scanning
    /// columns left to right.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..self.ncols {
            if row >= self.rows.len() {
                break;
            }
            let Some(p) = (row..self.rows.len()).find(|&r| !self.rows[r][col].is_zero()) else {
                continue;
            };
            self.rows.swap(row, p);
            let inv = self.rows[row][col].clone();
            for v in self.rows[row].iter_mut() {
                if !v.is_zero() {
                    *v /= &inv;
                }
            }
            for r in 0..self.rows.len() {
                if r != row && !self.rows[r][col].is_zero() {
                    let factor = self.rows[r][col].clone();
                    for c in 0..self.ncols {
                        let delta = &self.rows[row][c] * &factor;
                        self.rows[r][c] -= delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        self.rows.retain(|r| r.iter().any(|v| !v.is_zero()));
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel. Each vector is normalized so its first
    /// nonzero entry is 1; vectors are ordered by free column index.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.ncols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if is_pivot[free] {
                continue;
            }
            let mut vec = vec![Rat::zero(); self.ncols];
            vec[free] = Rat::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                vec[pc] = -m.rows[ri][free].clone();
            }
            // First nonzero entry -> 1.
            if let Some(first) = vec.iter().position(|v| !v.is_zero()) {
                let inv = vec[first].clone();
                for v in vec.iter_mut() {
                    if !v.is_zero() {
                        *v /= &inv;
                    }
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// Is `v` in the row span?
    pub fn row_span_contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ncols);
        let mut m = self.clone();
        let rank = m.rref().len();
        m.rows.push(v.to_vec());
        m.rref().len() == rank
    }
}

/// Kernel basis plus rank of a rational matrix, as one call.
pub fn linear_solve(matrix: &QMat) -> (Vec<Vec<Rat>>, usize) {
    (matrix.kernel_basis(), matrix.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn kernel_of_identity_is_trivial() {
        let m = QMat::identity(3);
        let (kernel, rank) = linear_solve(&m);
        assert!(kernel.is_empty());
        assert_eq!(rank, 3);
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let m = QMat::zero(2, 3);
        let (kernel, rank) = linear_solve(&m);
        assert_eq!(kernel.len(), 3);
        assert_eq!(rank, 0);
    }

    #[test]
    fn dependent_rows() {
        let m = QMat::new(
            vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]],
            2,
        );
        let (kernel, rank) = linear_solve(&m);
        assert_eq!(rank, 1);
        assert_eq!(kernel, vec![vec![rat(1), rat(-1)]]);
    }

    #[test]
    fn kernel_vectors_lead_with_one() {
        let m = QMat::new(vec![vec![rat(0), rat(2), rat(4)]], 3);
        let (kernel, _) = linear_solve(&m);
        for v in &kernel {
            let first = v.iter().find(|x| !x.is_zero()).unwrap();
            assert_eq!(first, &rat(1));
        }
    }
}
