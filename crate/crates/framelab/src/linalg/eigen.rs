//! Cyclic Jacobi eigensolver for Hermitian matrices.
//!
//! Each sweep visits every off-diagonal pivot `(p, q)` in row order and
//! applies a unitary plane rotation that annihilates the pivot entry. For a
//! Hermitian pivot block `[[alpha, g], [conj(g), beta]]` with `g = |g| e^{i phi}`
//! the rotation is
//!
//! ```text
//!   G = [[ c,            -s e^{i phi} ],
//!        [ s e^{-i phi},  c           ]]
//! ```
//!
//! with `t = tan(theta)` the smaller-magnitude root of
//! `t^2 - 2 tau t - 1 = 0`, `tau = (beta - alpha) / (2 |g|)`. Real symmetric
//! input keeps `phi in {0, pi}`, so the iteration stays real and the one
//! solver serves both scalar fields.

use num_complex::Complex64;

use super::Mat;
use crate::error::{FrameError, Result};
use crate::tol;

/// Result of a Hermitian eigendecomposition: `A = V diag(lambda) V*` with
/// eigenvalues ascending and the columns of `V` orthonormal.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    /// Column `k` is the unit eigenvector for `eigenvalues[k]`.
    pub vectors: Mat,
}

impl EigenDecomposition {
    pub fn min(&self) -> f64 {
        *self.eigenvalues.first().expect("nonempty spectrum")
    }

    pub fn max(&self) -> f64 {
        *self.eigenvalues.last().expect("nonempty spectrum")
    }

    pub fn eigenvector(&self, k: usize) -> Vec<Complex64> {
        self.vectors.column(k)
    }

    /// Applies `f` to each eigenvalue and reassembles `V diag(f(lambda)) V*`.
    pub fn map_spectrum(&self, f: impl Fn(f64) -> f64) -> Mat {
        let n = self.eigenvalues.len();
        let mut scaled = self.vectors.clone();
        for (k, &lambda) in self.eigenvalues.iter().enumerate() {
            let factor = Complex64::new(f(lambda), 0.0);
            for i in 0..n {
                scaled[(i, k)] *= factor;
            }
        }
        scaled.mul(&self.vectors.adjoint())
    }
}

fn off_diagonal_norm(a: &Mat) -> f64 {
    let n = a.rows();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// The working copy is symmetrized up front, so tiny asymmetries within the
/// caller's validation tolerance do not perturb the iteration.
pub fn hermitian_eigen(matrix: &Mat) -> Result<EigenDecomposition> {
    let n = matrix.require_square()?;
    let mut a = matrix.clone();
    for i in 0..n {
        a[(i, i)] = Complex64::new(a[(i, i)].re, 0.0);
        for j in (i + 1)..n {
            let avg = (a[(i, j)] + a[(j, i)].conj()) * 0.5;
            a[(i, j)] = avg;
            a[(j, i)] = avg.conj();
        }
    }
    let mut v = Mat::identity(n);
    let scale = a.frobenius_norm();
    let threshold = tol::JACOBI_OFF_REL * scale;

    for _sweep in 0..tol::JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            return Ok(finish(a, v));
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    let off = off_diagonal_norm(&a);
    if off <= threshold {
        return Ok(finish(a, v));
    }
    Err(FrameError::EigenNonConvergence {
        sweeps: tol::JACOBI_MAX_SWEEPS,
        off_diagonal: off,
    })
}

fn rotate(a: &mut Mat, v: &mut Mat, p: usize, q: usize) {
    let g = a[(p, q)];
    let g_abs = g.norm();
    if g_abs == 0.0 {
        return;
    }
    let phase = g / g_abs;
    let alpha = a[(p, p)].re;
    let beta = a[(q, q)].re;
    let tau = (beta - alpha) / (2.0 * g_abs);
    // Smaller-magnitude root of t^2 - 2 tau t - 1 = 0.
    let t = if tau >= 0.0 {
        -1.0 / (tau + (tau * tau + 1.0).sqrt())
    } else {
        1.0 / (-tau + (tau * tau + 1.0).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let n = a.rows();
    let s_conj_phase = Complex64::new(s, 0.0) * phase.conj();
    let s_phase = Complex64::new(s, 0.0) * phase;

    // A <- A G, columns p and q.
    for r in 0..n {
        let arp = a[(r, p)];
        let arq = a[(r, q)];
        a[(r, p)] = arp * c + arq * s_conj_phase;
        a[(r, q)] = arq * c - arp * s_phase;
    }
    // A <- G* A, rows p and q.
    for r in 0..n {
        let apr = a[(p, r)];
        let aqr = a[(q, r)];
        a[(p, r)] = apr * c + aqr * s_phase;
        a[(q, r)] = aqr * c - apr * s_conj_phase;
    }
    // Analytic values for the pivot block, killing roundoff drift.
    let new_pp = alpha * c * c + beta * s * s + 2.0 * g_abs * c * s;
    let new_qq = alpha * s * s + beta * c * c - 2.0 * g_abs * c * s;
    a[(p, p)] = Complex64::new(new_pp, 0.0);
    a[(q, q)] = Complex64::new(new_qq, 0.0);
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);

    // V <- V G.
    for r in 0..n {
        let vrp = v[(r, p)];
        let vrq = v[(r, q)];
        v[(r, p)] = vrp * c + vrq * s_conj_phase;
        v[(r, q)] = vrq * c - vrp * s_phase;
    }
}

fn finish(a: Mat, v: Mat) -> EigenDecomposition {
    let n = a.rows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut vectors = Mat::zeros(n, n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for r in 0..n {
            vectors[(r, new_col)] = v[(r, old_col)];
        }
    }
    EigenDecomposition {
        eigenvalues,
        vectors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn diagonal_matrix_sorted() {
        let m = Mat::from_columns(&[
            vec![c(3.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(-1.0, 0.0)],
        ]);
        let e = hermitian_eigen(&m).unwrap();
        assert_eq!(e.eigenvalues, vec![-1.0, 3.0]);
    }

    #[test]
    fn real_symmetric_swap() {
        let m = Mat::from_columns(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        ]);
        let e = hermitian_eigen(&m).unwrap();
        assert!((e.eigenvalues[0] + 1.0).abs() < 1e-14);
        assert!((e.eigenvalues[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn complex_hermitian_two_by_two() {
        // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
        let m = Mat::from_columns(&[
            vec![c(2.0, 0.0), c(0.0, -1.0)],
            vec![c(0.0, 1.0), c(2.0, 0.0)],
        ]);
        let e = hermitian_eigen(&m).unwrap();
        assert!((e.eigenvalues[0] - 1.0).abs() < 1e-12);
        assert!((e.eigenvalues[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn random_hermitian_reconstructs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [1usize, 2, 3, 5, 8] {
            let mut m = Mat::zeros(n, n);
            for i in 0..n {
                m[(i, i)] = c(rng.gen_range(-2.0..2.0), 0.0);
                for j in (i + 1)..n {
                    let z = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                    m[(i, j)] = z;
                    m[(j, i)] = z.conj();
                }
            }
            let e = hermitian_eigen(&m).unwrap();
            assert!(
                e.vectors.is_unitary(1e-12),
                "eigenvectors not orthonormal, n={n}"
            );
            let reconstructed = e.map_spectrum(|x| x);
            assert!(
                reconstructed.sub(&m).max_abs() < 1e-12 * (1.0 + m.max_abs()),
                "reconstruction failed, n={n}"
            );
            // A v = lambda v for the extreme eigenvectors.
            for k in [0, n - 1] {
                let v = e.eigenvector(k);
                let av = m.apply(&v);
                for i in 0..n {
                    assert!((av[i] - v[i] * e.eigenvalues[k]).norm() < 1e-11);
                }
            }
        }
    }

    #[test]
    fn zero_matrix() {
        let e = hermitian_eigen(&Mat::zeros(3, 3)).unwrap();
        assert_eq!(e.eigenvalues, vec![0.0, 0.0, 0.0]);
        assert!(e.vectors.is_unitary(0.0));
    }
}
