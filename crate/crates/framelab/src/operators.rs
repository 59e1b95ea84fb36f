//! Analysis, synthesis, the frame operator, optimal bounds, canonical dual,
//! and the canonical Parseval frame.
//!
//! For a family `(phi_i)` in dimension `d`, the analysis operator sends `x`
//! to the coefficients `(inner(x, phi_i))_i` and the synthesis operator is
//! its adjoint `(c_i) -> sum c_i phi_i`. Their composition is the frame
//! operator `S = sum phi_i phi_i*`, a positive semidefinite Hermitian matrix
//! whose extreme eigenvalues are the optimal frame bounds: the best
//! constants in `A ||x||^2 <= sum |inner(x, phi_i)|^2 <= B ||x||^2`. When
//! `A > 0` the family spans and `S` is invertible; the canonical dual
//! `(S^{-1} phi_i)` then gives exact reconstruction, and `(S^{-1/2} phi_i)`
//! is the canonical Parseval frame, whose frame operator is the identity.
//!
//! Families that span only a proper subspace (for example projections of an
//! orthonormal basis) are frames *for their span*. [`RangeMode::Restricted`]
//! compresses the frame operator onto an orthonormal basis of the span, so
//! the lower bound becomes the smallest nonzero eigenvalue instead of 0.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{FrameError, Result};
use crate::frame::{inner, norm, Frame};
use crate::linalg::{
    hermitian_eigen, orthonormal_range_basis, spectral_norm, EigenDecomposition, Mat,
};
use crate::tol;

/// A validated self-adjoint matrix.
#[derive(Debug, Clone)]
pub struct HermitianOperator {
    mat: Mat,
}

impl HermitianOperator {
    /// Accepts a square matrix whose asymmetry `max |M - M*|` is at most
    /// `SELF_ADJOINT_REL` times the largest entry magnitude.
    pub fn new(mat: Mat) -> Result<HermitianOperator> {
        mat.require_square()?;
        let asymmetry = mat.asymmetry();
        if asymmetry > tol::SELF_ADJOINT_REL * mat.max_abs() {
            return Err(FrameError::NotHermitian { asymmetry });
        }
        Ok(HermitianOperator { mat })
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        self.mat.apply(x)
    }

    /// `inner(Mx, x)`, which is real for a self-adjoint `M`.
    pub fn quadratic_form(&self, x: &[Complex64]) -> f64 {
        inner(&self.mat.apply(x), x).re
    }

    pub fn eigen(&self) -> Result<EigenDecomposition> {
        hermitian_eigen(&self.mat)
    }

    /// Validates idempotence and self-adjointness within the projection
    /// tolerance; orthogonal projections are exactly the matrices passing.
    pub fn validate_projection(&self) -> Result<()> {
        let asymmetry = self.mat.asymmetry();
        if asymmetry > tol::PROJECTION_TOL {
            return Err(FrameError::NotAProjection(format!(
                "asymmetry {asymmetry:.3e} exceeds {:.1e}",
                tol::PROJECTION_TOL
            )));
        }
        let drift = self.mat.mul(&self.mat).sub(&self.mat).max_abs();
        if drift > tol::PROJECTION_TOL {
            return Err(FrameError::NotAProjection(format!(
                "idempotence defect {drift:.3e} exceeds {:.1e}",
                tol::PROJECTION_TOL
            )));
        }
        Ok(())
    }
}

/// Optimal frame bounds: the extreme eigenvalues of the frame operator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrameBounds {
    pub lower: f64,
    pub upper: f64,
}

/// Where to read the frame operator's spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RangeMode {
    /// Eigenvalues in the ambient space; a non-spanning family reports `A = 0`.
    Ambient,
    /// Eigenvalues of the frame operator compressed onto the family's span,
    /// so `A` is the smallest nonzero eigenvalue.
    Restricted,
}

/// Coefficients `(inner(x, phi_i))_i`.
pub fn analysis(frame: &Frame, x: &[Complex64]) -> Result<Vec<Complex64>> {
    if x.len() != frame.dim() {
        return Err(FrameError::DimensionMismatch {
            expected: frame.dim(),
            got: x.len(),
        });
    }
    Ok(frame.vectors().iter().map(|phi| inner(x, phi)).collect())
}

/// `sum_i c_i phi_i`.
pub fn synthesis(frame: &Frame, coefficients: &[Complex64]) -> Result<Vec<Complex64>> {
    if coefficients.len() != frame.len() {
        return Err(FrameError::LengthMismatch {
            expected: frame.len(),
            got: coefficients.len(),
        });
    }
    let mut out = vec![Complex64::new(0.0, 0.0); frame.dim()];
    for (c, phi) in coefficients.iter().zip(frame.vectors()) {
        for (o, p) in out.iter_mut().zip(phi) {
            *o += c * p;
        }
    }
    Ok(out)
}

/// `S = sum_i phi_i phi_i*`, assembled exactly Hermitian (upper triangle
/// computed, lower mirrored, diagonal real).
pub fn frame_operator(frame: &Frame) -> HermitianOperator {
    let d = frame.dim();
    let mut mat = Mat::zeros(d, d);
    for phi in frame.vectors() {
        for r in 0..d {
            mat[(r, r)] += Complex64::new(phi[r].norm_sqr(), 0.0);
            for s in (r + 1)..d {
                mat[(r, s)] += phi[r] * phi[s].conj();
            }
        }
    }
    for r in 0..d {
        for s in (r + 1)..d {
            mat[(s, r)] = mat[(r, s)].conj();
        }
    }
    HermitianOperator { mat }
}

/// Spectrum of the frame operator in the requested mode, together with the
/// eigenvectors expressed in ambient coordinates.
pub(crate) fn frame_spectrum(frame: &Frame, mode: RangeMode) -> Result<EigenDecomposition> {
    let s = frame_operator(frame);
    match mode {
        RangeMode::Ambient => s.eigen(),
        RangeMode::Restricted => {
            let columns: Vec<Vec<Complex64>> = frame.vectors().to_vec();
            let sigma = spectral_norm(&columns, frame.dim());
            if sigma == 0.0 {
                return Err(FrameError::AllZero);
            }
            let rank_tol = tol::rank_tolerance(frame.dim(), frame.len(), sigma);
            let basis = orthonormal_range_basis(&columns, frame.dim(), rank_tol);
            let q = Mat::from_columns(&basis);
            let compressed = q.adjoint().mul(s.mat()).mul(&q);
            let eig = hermitian_eigen(&compressed)?;
            // Map eigenvectors back to ambient coordinates: v = Q w.
            let ambient = q.mul(&eig.vectors);
            Ok(EigenDecomposition {
                eigenvalues: eig.eigenvalues,
                vectors: ambient,
            })
        }
    }
}

/// Optimal bounds in the ambient space.
pub fn frame_bounds(frame: &Frame) -> Result<FrameBounds> {
    frame_bounds_in_mode(frame, RangeMode::Ambient)
}

/// Optimal bounds in the requested mode.
pub fn frame_bounds_in_mode(frame: &Frame, mode: RangeMode) -> Result<FrameBounds> {
    let eig = frame_spectrum(frame, mode)?;
    Ok(FrameBounds {
        lower: eig.min().max(0.0),
        upper: eig.max().max(0.0),
    })
}

/// Eigendecomposition of `S`, rejected unless the smallest eigenvalue clears
/// the spanning threshold `SPANNING_REL * lambda_max`.
fn spanning_spectrum(frame: &Frame) -> Result<EigenDecomposition> {
    let eig = frame_operator(frame).eigen()?;
    let min = eig.min();
    if min <= tol::SPANNING_REL * eig.max() || eig.max() <= 0.0 {
        return Err(FrameError::NonSpanning {
            min_eigenvalue: min,
        });
    }
    Ok(eig)
}

/// The canonical dual `(S^{-1} phi_i)_i`; requires a spanning frame.
pub fn canonical_dual(frame: &Frame) -> Result<Frame> {
    let eig = spanning_spectrum(frame)?;
    let inverse = eig.map_spectrum(|l| 1.0 / l);
    frame.transformed(&inverse)
}

/// `sum_i inner(x, S^{-1} phi_i) phi_i`, which equals `x` for a spanning
/// frame up to roundoff.
pub fn reconstruct(frame: &Frame, x: &[Complex64]) -> Result<Vec<Complex64>> {
    let dual = canonical_dual(frame)?;
    let coefficients = analysis(&dual, x)?;
    synthesis(frame, &coefficients)
}

/// The canonical Parseval frame `(S^{-1/2} phi_i)_i`; requires spanning.
pub fn canonical_parseval(frame: &Frame) -> Result<Frame> {
    let eig = spanning_spectrum(frame)?;
    let root_inverse = eig.map_spectrum(|l| 1.0 / l.sqrt());
    frame.transformed(&root_inverse)
}

/// Structural flags for a frame, each decided at a documented tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    /// The vectors span the ambient space.
    pub spanning: bool,
    /// Optimal bounds coincide: `B - A <= CLASSIFY_REL * B`.
    pub tight: bool,
    /// Tight with common bound 1.
    pub parseval: bool,
    /// All norms agree within ratio `1 + EQUAL_NORM_REL`.
    pub equal_norm: bool,
    /// Equal-norm with common norm 1.
    pub unit_norm: bool,
    /// No zero vectors and all pairwise inner products vanish relative to the
    /// norms. A repeated vector is parallel, not orthogonal, so duplicates
    /// always clear this flag.
    pub orthogonal: bool,
}

/// Classifies a frame by its bounds, norms, and pairwise inner products.
pub fn classify(frame: &Frame) -> Result<Classification> {
    let bounds = frame_bounds(frame)?;
    let spanning = bounds.upper > 0.0 && bounds.lower > tol::SPANNING_REL * bounds.upper;
    let tight =
        bounds.upper > 0.0 && bounds.upper - bounds.lower <= tol::CLASSIFY_REL * bounds.upper;
    let parseval = tight && (bounds.upper - 1.0).abs() <= tol::CLASSIFY_REL;

    let norms = frame.norms();
    let max_n = norms.iter().cloned().fold(0.0, f64::max);
    let min_n = norms.iter().cloned().fold(f64::INFINITY, f64::min);
    let equal_norm = max_n > 0.0 && max_n <= (1.0 + tol::EQUAL_NORM_REL) * min_n;
    let unit_norm = equal_norm && (max_n - 1.0).abs() <= tol::EQUAL_NORM_REL;

    let threshold = frame.zero_threshold();
    let mut orthogonal = norms.iter().all(|&n| n > threshold);
    if orthogonal {
        'outer: for i in 0..frame.len() {
            for j in (i + 1)..frame.len() {
                let ip = inner(frame.vector(i), frame.vector(j)).norm();
                if ip > tol::CLASSIFY_REL * norms[i] * norms[j] {
                    orthogonal = false;
                    break 'outer;
                }
            }
        }
    }

    Ok(Classification {
        spanning,
        tight,
        parseval,
        equal_norm,
        unit_norm,
        orthogonal,
    })
}

/// Norm of the difference between `reconstruct(frame, x)` and `x`, relative
/// to `||x||`; zero for `x = 0`.
pub fn reconstruction_error(frame: &Frame, x: &[Complex64]) -> Result<f64> {
    let back = reconstruct(frame, x)?;
    let n = norm(x);
    if n == 0.0 {
        return Ok(norm(&back));
    }
    let diff: Vec<Complex64> = back.iter().zip(x).map(|(a, b)| a - b).collect();
    Ok(norm(&diff) / n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::max_abs_diff;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn onb(d: usize) -> Frame {
        let rows: Vec<Vec<f64>> = (0..d)
            .map(|i| (0..d).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        Frame::real(d, &rows).unwrap()
    }

    /// The doubled orthonormal basis (e_1, e_1, ..., e_n, e_n).
    fn doubled_onb(n: usize) -> Frame {
        let mut rows = Vec::new();
        for i in 0..n {
            let mut e = vec![0.0; n];
            e[i] = 1.0;
            rows.push(e.clone());
            rows.push(e);
        }
        Frame::real(n, &rows).unwrap()
    }

    #[test]
    fn analysis_on_orthonormal_bases() {
        let f = onb(2);
        let coeffs = analysis(&f, &[c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(coeffs, vec![c(1.0, 0.0), c(0.0, 0.0)]);

        let doubled = doubled_onb(2);
        let coeffs = analysis(&doubled, &[c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert_eq!(
            coeffs,
            vec![c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]
        );
    }

    #[test]
    fn synthesis_cases() {
        let f = onb(2);
        assert_eq!(
            synthesis(&f, &[c(1.0, 0.0), c(1.0, 0.0)]).unwrap(),
            vec![c(1.0, 0.0), c(1.0, 0.0)]
        );
        let doubled = doubled_onb(2);
        assert_eq!(
            synthesis(&doubled, &[c(0.0, 0.0); 4]).unwrap(),
            vec![c(0.0, 0.0), c(0.0, 0.0)]
        );
        // Repeated vector cancellation: c = (1, -1, 0, 0) on (e1, e1, e2, e2).
        let coeffs = [c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        assert_eq!(
            synthesis(&doubled, &coeffs).unwrap(),
            vec![c(0.0, 0.0), c(0.0, 0.0)]
        );
    }

    #[test]
    fn frame_operator_of_doubled_onb() {
        let s = frame_operator(&doubled_onb(2));
        assert!(s.mat().sub(&Mat::identity(2).scale(c(2.0, 0.0))).max_abs() < 1e-15);
    }

    #[test]
    fn bounds_of_spiked_frame() {
        // e_1 five times plus e_2, e_3, e_4: S = diag(5, 1, 1, 1).
        let mut rows = vec![vec![1.0, 0.0, 0.0, 0.0]; 5];
        for i in 1..4 {
            let mut e = vec![0.0; 4];
            e[i] = 1.0;
            rows.push(e);
        }
        let f = Frame::real(4, &rows).unwrap();
        let b = frame_bounds(&f).unwrap();
        assert!((b.lower - 1.0).abs() < 1e-12);
        assert!((b.upper - 5.0).abs() < 1e-12);

        let dual = canonical_dual(&f).unwrap();
        for i in 0..5 {
            assert!(
                max_abs_diff(
                    dual.vector(i),
                    &[c(0.2, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]
                ) < 1e-12
            );
        }
        assert!(max_abs_diff(dual.vector(5), f.vector(5)) < 1e-12);

        let parseval = canonical_parseval(&f).unwrap();
        let inv_root5 = 1.0 / 5.0f64.sqrt();
        assert!((parseval.vector(0)[0].re - inv_root5).abs() < 1e-12);
        let pb = frame_bounds(&parseval).unwrap();
        assert!((pb.lower - 1.0).abs() < 1e-10 && (pb.upper - 1.0).abs() < 1e-10);
    }

    #[test]
    fn reconstruction_identity() {
        let doubled = doubled_onb(2);
        let x = [c(3.0, 0.0), c(-4.0, 0.0)];
        let back = reconstruct(&doubled, &x).unwrap();
        assert!(max_abs_diff(&back, &x) < 1e-12);
        assert_eq!(
            reconstruct(&doubled, &[c(0.0, 0.0); 2]).unwrap(),
            vec![c(0.0, 0.0); 2]
        );
    }

    #[test]
    fn dual_of_parseval_is_itself() {
        let f = onb(3);
        let dual = canonical_dual(&f).unwrap();
        for i in 0..3 {
            assert!(max_abs_diff(dual.vector(i), f.vector(i)) < 1e-12);
        }
        let parseval = canonical_parseval(&f).unwrap();
        for i in 0..3 {
            assert!(max_abs_diff(parseval.vector(i), f.vector(i)) < 1e-10);
        }
    }

    #[test]
    fn non_spanning_frame_refused() {
        let f = Frame::real(2, &[vec![1.0, 0.0], vec![2.0, 0.0]]).unwrap();
        assert!(matches!(
            canonical_dual(&f),
            Err(FrameError::NonSpanning { .. })
        ));
        assert!(matches!(
            canonical_parseval(&f),
            Err(FrameError::NonSpanning { .. })
        ));
        // Ambient bounds report A = 0; the restricted mode sees a frame for
        // the 1-dimensional span.
        let ambient = frame_bounds(&f).unwrap();
        assert!(ambient.lower.abs() < 1e-12);
        assert!((ambient.upper - 5.0).abs() < 1e-12);
        let restricted = frame_bounds_in_mode(&f, RangeMode::Restricted).unwrap();
        assert!((restricted.lower - 5.0).abs() < 1e-12);
        assert!((restricted.upper - 5.0).abs() < 1e-12);
    }

    #[test]
    fn classify_onb_all_flags() {
        let flags = classify(&onb(3)).unwrap();
        assert!(flags.spanning && flags.tight && flags.parseval);
        assert!(flags.equal_norm && flags.unit_norm && flags.orthogonal);
    }

    #[test]
    fn classify_doubled_onb_not_orthogonal() {
        let flags = classify(&doubled_onb(2)).unwrap();
        assert!(flags.spanning && flags.tight && !flags.parseval);
        assert!(flags.unit_norm && !flags.orthogonal);
    }

    #[test]
    fn quadratic_form_is_real_and_matches() {
        let s = frame_operator(&doubled_onb(3));
        let x = [c(0.5, 0.5), c(0.0, -0.5), c(0.5, 0.0)];
        let norm_sq: f64 = x.iter().map(|z| z.norm_sqr()).sum();
        assert!((s.quadratic_form(&x) - 2.0 * norm_sq).abs() < 1e-14);
    }

    #[test]
    fn hermitian_validation() {
        let mut m = Mat::identity(2);
        m[(0, 1)] = c(0.5, 0.0);
        assert!(matches!(
            HermitianOperator::new(m),
            Err(FrameError::NotHermitian { .. })
        ));
    }

    #[test]
    fn projection_validation() {
        let half = c(0.5, 0.0);
        let p = Mat::from_columns(&[vec![half, half], vec![half, half]]);
        HermitianOperator::new(p)
            .unwrap()
            .validate_projection()
            .unwrap();
        let not_p = Mat::identity(2).scale(c(0.5, 0.0));
        assert!(HermitianOperator::new(not_p)
            .unwrap()
            .validate_projection()
            .is_err());
    }
}
