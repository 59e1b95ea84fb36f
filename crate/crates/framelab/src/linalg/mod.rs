//! Dense linear algebra over complex scalars.
//!
//! Everything in the crate stores scalars as `Complex64`; real data simply
//! carries zero imaginary parts, which keeps one code path for both fields.
//! The solvers are self-contained: a cyclic Jacobi eigensolver for Hermitian
//! matrices and a column-pivoted Householder QR for numerical rank. Problem
//! sizes here are small (ambient dimensions up to a few hundred), where these
//! methods are robust and fast enough.

mod eigen;
mod qr;

pub use eigen::{hermitian_eigen, EigenDecomposition};
pub use qr::{numerical_rank, orthonormal_columns, orthonormal_range_basis, spectral_norm};

use num_complex::Complex64;

use crate::error::{FrameError, Result};

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix whose columns are the given slices, all of equal length.
    pub fn from_columns(columns: &[Vec<Complex64>]) -> Self {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        let mut m = Mat::zeros(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, &v) in col.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Complex64>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat {
        let mut out = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        let mut out = vec![Complex64::new(0.0, 0.0); self.rows];
        for i in 0..self.rows {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..self.cols {
                acc += self[(i, j)] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, factor: Complex64) -> Mat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= factor;
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest magnitude of `A - A*` over all entries.
    pub fn asymmetry(&self) -> f64 {
        assert_eq!(self.rows, self.cols);
        let mut worst: f64 = 0.0;
        for i in 0..self.rows {
            for j in i..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        if self.rows != self.cols {
            return false;
        }
        self.adjoint()
            .mul(self)
            .sub(&Mat::identity(self.rows))
            .max_abs()
            <= tol
    }

    /// Checks invertibility through the numerical rank of the columns.
    pub fn is_invertible(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let cols = self.columns();
        let sigma = spectral_norm(&cols, self.rows);
        if sigma == 0.0 {
            return false;
        }
        let tol = crate::tol::rank_tolerance(self.rows, self.cols, sigma);
        numerical_rank(&cols, self.rows, tol) == self.rows
    }

    /// All entries finite.
    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(FrameError::InvalidParameter(format!(
                "matrix is {}x{}, expected square",
                self.rows, self.cols
            )));
        }
        Ok(self.rows)
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn mul_and_adjoint() {
        let a = Mat::from_columns(&[
            vec![c(1.0, 0.0), c(0.0, 1.0)],
            vec![c(2.0, 0.0), c(0.0, 0.0)],
        ]);
        let prod = a.adjoint().mul(&a);
        // Gram matrix of the two columns.
        assert!((prod[(0, 0)] - c(2.0, 0.0)).norm() < 1e-15);
        assert!((prod[(1, 1)] - c(4.0, 0.0)).norm() < 1e-15);
        assert!((prod[(0, 1)] - c(2.0, 0.0)).norm() < 1e-15);
        assert_eq!(prod.asymmetry(), 0.0);
    }

    #[test]
    fn identity_is_unitary() {
        assert!(Mat::identity(4).is_unitary(1e-14));
        assert!(Mat::identity(4).is_invertible());
    }

    #[test]
    fn singular_matrix_detected() {
        let a = Mat::from_columns(&[
            vec![c(1.0, 0.0), c(2.0, 0.0)],
            vec![c(2.0, 0.0), c(4.0, 0.0)],
        ]);
        assert!(!a.is_invertible());
    }
}
