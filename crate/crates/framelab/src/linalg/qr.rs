//! Householder QR with column pivoting: numerical rank, spectral norm, and
//! orthonormal bases.
//!
//! Pivoting selects, at every step, the remaining column whose tail has the
//! largest norm (recomputed exactly, not downdated). The resulting diagonal
//! `|r_00| >= |r_11| >= ...` decays monotonically, so the numerical rank is
//! the number of diagonal entries above the caller's tolerance.

use num_complex::Complex64;

use super::eigen::hermitian_eigen;
use super::Mat;
use crate::error::{FrameError, Result};

/// Factorization state shared by the rank / basis entry points.
struct Cpqr {
    /// Accumulated product of Householder reflectors (unitary, dim x dim).
    q: Mat,
    /// `|r_tt|` for each completed step, non-increasing.
    r_diag: Vec<f64>,
}

fn column_pivoted_qr(columns: &[Vec<Complex64>], dim: usize) -> Cpqr {
    let k = columns.len();
    let mut w = Mat::zeros(dim, k);
    for (j, col) in columns.iter().enumerate() {
        for i in 0..dim {
            w[(i, j)] = col[i];
        }
    }
    let mut q = Mat::identity(dim);
    let mut r_diag = Vec::new();

    let steps = dim.min(k);
    for t in 0..steps {
        // Exact tail norms of the remaining columns; pivot on the largest.
        let mut best = t;
        let mut best_norm = 0.0f64;
        for j in t..k {
            let norm_sq: f64 = (t..dim).map(|i| w[(i, j)].norm_sqr()).sum();
            if norm_sq > best_norm {
                best_norm = norm_sq;
                best = j;
            }
        }
        if best_norm == 0.0 {
            break;
        }
        if best != t {
            for i in 0..dim {
                let tmp = w[(i, t)];
                w[(i, t)] = w[(i, best)];
                w[(i, best)] = tmp;
            }
        }

        let x_norm = best_norm.sqrt();
        let x0 = w[(t, t)];
        let phase = if x0.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let alpha = -phase * x_norm;
        // v = x - alpha e_1; the leading entry |x0| + ||x|| never cancels.
        let mut v = vec![Complex64::new(0.0, 0.0); dim - t];
        v[0] = x0 - alpha;
        for i in (t + 1)..dim {
            v[i - t] = w[(i, t)];
        }
        let v_norm_sq: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        let tau = 2.0 / v_norm_sq;

        // W <- H W on rows t.., columns t.. .
        for j in t..k {
            let mut dot = Complex64::new(0.0, 0.0);
            for i in t..dim {
                dot += v[i - t].conj() * w[(i, j)];
            }
            let coeff = dot * tau;
            for i in t..dim {
                w[(i, j)] -= coeff * v[i - t];
            }
        }
        w[(t, t)] = alpha;
        for i in (t + 1)..dim {
            w[(i, t)] = Complex64::new(0.0, 0.0);
        }

        // Q <- Q H, accumulating the reflectors left to right.
        for r in 0..dim {
            let mut dot = Complex64::new(0.0, 0.0);
            for i in t..dim {
                dot += q[(r, i)] * v[i - t];
            }
            let coeff = dot * tau;
            for i in t..dim {
                q[(r, i)] -= coeff * v[i - t].conj();
            }
        }

        r_diag.push(x_norm);
    }
    Cpqr { q, r_diag }
}

/// Number of `|r_tt|` above `tol` in the pivoted factorization.
pub fn numerical_rank(columns: &[Vec<Complex64>], dim: usize, tol: f64) -> usize {
    if columns.is_empty() || dim == 0 {
        return 0;
    }
    let fac = column_pivoted_qr(columns, dim);
    fac.r_diag.iter().take_while(|&&r| r > tol).count()
}

/// Largest singular value, computed as the root of the top eigenvalue of the
/// smaller Gram matrix (`A*A` or `AA*`, whichever side is shorter).
pub fn spectral_norm(columns: &[Vec<Complex64>], dim: usize) -> f64 {
    let k = columns.len();
    if k == 0 || dim == 0 {
        return 0.0;
    }
    let gram = if k <= dim {
        let mut g = Mat::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                let mut acc = Complex64::new(0.0, 0.0);
                for r in 0..dim {
                    acc += columns[i][r].conj() * columns[j][r];
                }
                g[(i, j)] = acc;
            }
        }
        g
    } else {
        let mut g = Mat::zeros(dim, dim);
        for r in 0..dim {
            for s in 0..dim {
                let mut acc = Complex64::new(0.0, 0.0);
                for col in columns {
                    acc += col[r] * col[s].conj();
                }
                g[(r, s)] = acc;
            }
        }
        g
    };
    let eig = hermitian_eigen(&gram).expect("Gram matrices are Hermitian PSD");
    eig.max().max(0.0).sqrt()
}

/// Orthonormal basis for the numerical column span: the first `rank` columns
/// of the accumulated `Q`.
pub fn orthonormal_range_basis(
    columns: &[Vec<Complex64>],
    dim: usize,
    tol: f64,
) -> Vec<Vec<Complex64>> {
    if columns.is_empty() || dim == 0 {
        return Vec::new();
    }
    let fac = column_pivoted_qr(columns, dim);
    let rank = fac.r_diag.iter().take_while(|&&r| r > tol).count();
    (0..rank).map(|j| fac.q.column(j)).collect()
}

/// Unitary factor of an unpivoted QR of a square invertible matrix, with
/// phases fixed so the triangular factor has positive real diagonal. The map
/// is deterministic and sends the identity to itself, which makes it suitable
/// for turning seeded Gaussian matrices into well-distributed unitaries.
pub fn orthonormal_columns(matrix: &Mat) -> Result<Mat> {
    let n = matrix.require_square()?;

    // Unpivoted Householder pass (pivoting would break the phase convention).
    let mut w = matrix.clone();
    let mut q = Mat::identity(n);
    for t in 0..n {
        let norm_sq: f64 = (t..n).map(|i| w[(i, t)].norm_sqr()).sum();
        if norm_sq == 0.0 {
            return Err(FrameError::MalformedTransform(format!(
                "matrix is singular at column {t}; cannot orthonormalize"
            )));
        }
        let x_norm = norm_sq.sqrt();
        let x0 = w[(t, t)];
        let phase = if x0.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let alpha = -phase * x_norm;
        let mut v = vec![Complex64::new(0.0, 0.0); n - t];
        v[0] = x0 - alpha;
        for i in (t + 1)..n {
            v[i - t] = w[(i, t)];
        }
        let v_norm_sq: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        let tau = 2.0 / v_norm_sq;
        for j in t..n {
            let mut dot = Complex64::new(0.0, 0.0);
            for i in t..n {
                dot += v[i - t].conj() * w[(i, j)];
            }
            let coeff = dot * tau;
            for i in t..n {
                w[(i, j)] -= coeff * v[i - t];
            }
        }
        w[(t, t)] = alpha;
        for i in (t + 1)..n {
            w[(i, t)] = Complex64::new(0.0, 0.0);
        }
        for r in 0..n {
            let mut dot = Complex64::new(0.0, 0.0);
            for i in t..n {
                dot += q[(r, i)] * v[i - t];
            }
            let coeff = dot * tau;
            for i in t..n {
                q[(r, i)] -= coeff * v[i - t].conj();
            }
        }
    }
    // Q <- Q D with D = diag(r_tt / |r_tt|), making D* R positive-diagonal.
    for t in 0..n {
        let r_tt = w[(t, t)];
        let phase = r_tt / r_tt.norm();
        for r in 0..n {
            q[(r, t)] *= phase;
        }
    }
    Ok(q)
}
