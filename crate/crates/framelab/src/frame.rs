//! Frames: ordered finite families of vectors in `R^d` or `C^d`.
//!
//! A frame here is just the indexed family `(phi_1, ..., phi_N)` together
//! with its ambient dimension and scalar field; whether the family actually
//! *is* a frame (spans, has a positive lower bound) is a property checked by
//! the operator layer, not a construction invariant. Scalars are always
//! stored as `Complex64`; a real frame simply certifies that every imaginary
//! part is zero, which lets one code path serve both fields while the field
//! tag still controls validation and serialization.
//!
//! The inner product is linear in the first argument and conjugate-linear in
//! the second: `inner(x, y) = sum_k x_k * conj(y_k)`. Every inner product in
//! the crate goes through [`inner`], so the convention cannot drift between
//! modules.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{FrameError, Result};
use crate::tol;

/// Scalar field tag for a frame. All vectors of one frame share it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarField {
    Real,
    Complex,
}

/// `sum_k x_k * conj(y_k)`: linear in `x`, conjugate-linear in `y`.
pub fn inner(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| a * b.conj()).sum()
}

/// Euclidean norm.
pub fn norm(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `a * x` entrywise.
pub fn scaled(x: &[Complex64], a: Complex64) -> Vec<Complex64> {
    x.iter().map(|z| z * a).collect()
}

/// `x + y` entrywise.
pub fn add(x: &[Complex64], y: &[Complex64]) -> Vec<Complex64> {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// Largest entrywise distance between two vectors.
pub fn max_abs_diff(x: &[Complex64], y: &[Complex64]) -> f64 {
    x.iter()
        .zip(y)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
}

/// An ordered family of `N >= 1` vectors in dimension `d >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    field: ScalarField,
    dim: usize,
    vectors: Vec<Vec<Complex64>>,
    labels: Option<Vec<String>>,
}

/// Outcome of zero-stripping and normalizing a frame.
#[derive(Debug, Clone)]
pub struct StrippedFrame {
    /// The surviving vectors, each scaled to unit norm, in original order.
    pub frame: Frame,
    /// Indices (0-based, into the original frame) of dropped zero vectors.
    pub dropped: Vec<usize>,
    /// Indices of the survivors, aligned with `frame`'s vectors.
    pub kept: Vec<usize>,
}

impl Frame {
    /// Validates and builds a frame: positive dimension, at least one vector,
    /// every vector of length `dim` with finite entries, and purely real
    /// entries when the field tag says real.
    pub fn new(field: ScalarField, dim: usize, vectors: Vec<Vec<Complex64>>) -> Result<Frame> {
        if dim == 0 {
            return Err(FrameError::InvalidParameter(
                "dimension must be positive".into(),
            ));
        }
        if vectors.is_empty() {
            return Err(FrameError::EmptyFrame);
        }
        for (index, v) in vectors.iter().enumerate() {
            if v.len() != dim {
                return Err(FrameError::DimensionMismatch {
                    expected: dim,
                    got: v.len(),
                });
            }
            for z in v {
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(FrameError::NonFinite { index });
                }
                if field == ScalarField::Real && z.im != 0.0 {
                    return Err(FrameError::FieldMismatch);
                }
            }
        }
        Ok(Frame {
            field,
            dim,
            vectors,
            labels: None,
        })
    }

    /// A real frame from real coordinate rows.
    pub fn real(dim: usize, vectors: &[Vec<f64>]) -> Result<Frame> {
        let lifted = vectors
            .iter()
            .map(|v| v.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Frame::new(ScalarField::Real, dim, lifted)
    }

    /// A complex frame from complex vectors.
    pub fn complex(dim: usize, vectors: Vec<Vec<Complex64>>) -> Result<Frame> {
        Frame::new(ScalarField::Complex, dim, vectors)
    }

    /// Attaches per-vector labels (must match the vector count).
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Frame> {
        if labels.len() != self.vectors.len() {
            return Err(FrameError::LengthMismatch {
                expected: self.vectors.len(),
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of vectors `N`.
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    /// Always false: construction requires at least one vector.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vectors(&self) -> &[Vec<Complex64>] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &[Complex64] {
        &self.vectors[i]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn norms(&self) -> Vec<f64> {
        self.vectors.iter().map(|v| norm(v)).collect()
    }

    pub fn max_norm(&self) -> f64 {
        self.norms().into_iter().fold(0.0, f64::max)
    }

    /// The zero-vector threshold: relative to the largest norm present, with
    /// an absolute floor so degenerate all-tiny frames still strip cleanly.
    pub fn zero_threshold(&self) -> f64 {
        (tol::ZERO_VECTOR_REL * self.max_norm()).max(tol::ZERO_VECTOR_FLOOR)
    }

    /// Drops vectors with norm at or below [`Frame::zero_threshold`] and
    /// scales the survivors to unit norm. Errors when nothing survives.
    pub fn strip_and_normalize(&self) -> Result<StrippedFrame> {
        let threshold = self.zero_threshold();
        let mut kept = Vec::new();
        let mut dropped = Vec::new();
        let mut out = Vec::new();
        for (i, v) in self.vectors.iter().enumerate() {
            let n = norm(v);
            if n <= threshold {
                dropped.push(i);
            } else {
                kept.push(i);
                out.push(scaled(v, Complex64::new(1.0 / n, 0.0)));
            }
        }
        if out.is_empty() {
            return Err(FrameError::AllZero);
        }
        let mut frame = Frame::new(self.field, self.dim, out)?;
        if let Some(labels) = &self.labels {
            frame = frame.with_labels(kept.iter().map(|&i| labels[i].clone()).collect())?;
        }
        Ok(StrippedFrame {
            frame,
            dropped,
            kept,
        })
    }

    /// The subfamily at the given 0-based indices, in the given order.
    pub fn subframe(&self, indices: &[usize]) -> Result<Frame> {
        let n = self.len();
        for &i in indices {
            if i >= n {
                return Err(FrameError::IndexOutOfRange { index: i, n });
            }
        }
        if indices.is_empty() {
            return Err(FrameError::EmptyFrame);
        }
        let vectors = indices.iter().map(|&i| self.vectors[i].clone()).collect();
        let mut frame = Frame::new(self.field, self.dim, vectors)?;
        if let Some(labels) = &self.labels {
            frame = frame.with_labels(indices.iter().map(|&i| labels[i].clone()).collect())?;
        }
        Ok(frame)
    }

    /// The same vectors viewed over the complex field.
    pub fn to_complex(&self) -> Frame {
        Frame {
            field: ScalarField::Complex,
            ..self.clone()
        }
    }

    /// Concatenation `self ∪ other` (same dimension and field required).
    pub fn concat(&self, other: &Frame) -> Result<Frame> {
        if self.dim != other.dim {
            return Err(FrameError::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        if self.field != other.field {
            return Err(FrameError::FieldMismatch);
        }
        let mut vectors = self.vectors.clone();
        vectors.extend(other.vectors.iter().cloned());
        Frame::new(self.field, self.dim, vectors)
    }

    /// Reorders the vectors by `perm`, which must be a permutation of
    /// `0..N` (vector `i` of the result is vector `perm[i]` of `self`).
    pub fn permuted(&self, perm: &[usize]) -> Result<Frame> {
        let n = self.len();
        if perm.len() != n {
            return Err(FrameError::LengthMismatch {
                expected: n,
                got: perm.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n {
                return Err(FrameError::IndexOutOfRange { index: p, n });
            }
            if seen[p] {
                return Err(FrameError::MalformedTransform(format!(
                    "index {p} repeats; not a permutation"
                )));
            }
            seen[p] = true;
        }
        self.subframe(perm)
    }

    /// Scales vector `i` by `scalars[i]`; every scalar must have magnitude
    /// above the scalar floor, since a zero scaling silently creates a zero
    /// vector and changes the redundancy.
    pub fn rescaled(&self, scalars: &[Complex64]) -> Result<Frame> {
        let n = self.len();
        if scalars.len() != n {
            return Err(FrameError::LengthMismatch {
                expected: n,
                got: scalars.len(),
            });
        }
        for a in scalars {
            if a.norm() < tol::SCALAR_FLOOR {
                return Err(FrameError::MalformedTransform(format!(
                    "scalar magnitude {:.3e} is below the floor {:.1e}",
                    a.norm(),
                    tol::SCALAR_FLOOR
                )));
            }
        }
        let field = if self.field == ScalarField::Real && scalars.iter().all(|a| a.im == 0.0) {
            ScalarField::Real
        } else {
            ScalarField::Complex
        };
        let vectors = self
            .vectors
            .iter()
            .zip(scalars)
            .map(|(v, &a)| scaled(v, a))
            .collect();
        Frame::new(field, self.dim, vectors)
    }

    /// Applies a `d x d` matrix to every vector: the frame `(T phi_i)_i`.
    pub fn transformed(&self, t: &crate::linalg::Mat) -> Result<Frame> {
        if t.rows() != self.dim || t.cols() != self.dim {
            return Err(FrameError::MalformedTransform(format!(
                "transform is {}x{}, frame dimension is {}",
                t.rows(),
                t.cols(),
                self.dim
            )));
        }
        let vectors: Vec<Vec<Complex64>> = self.vectors.iter().map(|v| t.apply(v)).collect();
        let real_t = (0..t.rows()).all(|i| (0..t.cols()).all(|j| t[(i, j)].im == 0.0));
        let field = if self.field == ScalarField::Real && real_t {
            ScalarField::Real
        } else {
            ScalarField::Complex
        };
        Frame::new(field, self.dim, vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn construction_validates() {
        assert!(matches!(Frame::real(2, &[]), Err(FrameError::EmptyFrame)));
        assert!(matches!(
            Frame::real(2, &[vec![1.0, 0.0, 0.0]]),
            Err(FrameError::DimensionMismatch {
                expected: 2,
                got: 3
            })
        ));
        assert!(matches!(
            Frame::new(ScalarField::Real, 1, vec![vec![c(0.0, 1.0)]]),
            Err(FrameError::FieldMismatch)
        ));
        assert!(matches!(
            Frame::real(1, &[vec![f64::NAN]]),
            Err(FrameError::NonFinite { index: 0 })
        ));
    }

    #[test]
    fn inner_product_convention() {
        // inner(x, y) = sum x_k conj(y_k): linear in x, conjugate in y.
        let x = vec![c(0.0, 1.0)];
        let y = vec![c(1.0, 0.0)];
        assert_eq!(inner(&x, &y), c(0.0, 1.0));
        assert_eq!(inner(&y, &x), c(0.0, -1.0));
    }

    #[test]
    fn strip_and_normalize_scales_and_drops() {
        // (2e_1, 0, 3e_2) -> (e_1, e_2), dropped = {1} (0-based).
        let f = Frame::real(2, &[vec![2.0, 0.0], vec![0.0, 0.0], vec![0.0, 3.0]]).unwrap();
        let s = f.strip_and_normalize().unwrap();
        assert_eq!(s.dropped, vec![1]);
        assert_eq!(s.kept, vec![0, 2]);
        assert_eq!(s.frame.vector(0), &[c(1.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(s.frame.vector(1), &[c(0.0, 0.0), c(1.0, 0.0)]);
    }

    #[test]
    fn all_zero_frame_is_an_error() {
        let f = Frame::real(2, &[vec![0.0, 0.0], vec![0.0, 0.0]]).unwrap();
        assert!(matches!(f.strip_and_normalize(), Err(FrameError::AllZero)));
    }

    #[test]
    fn unit_norm_frame_passes_through() {
        let f = Frame::real(2, &[vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let s = f.strip_and_normalize().unwrap();
        assert!(s.dropped.is_empty());
        assert_eq!(s.frame, f);
    }

    #[test]
    fn permutation_validation() {
        let f = Frame::real(2, &[vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert!(f.permuted(&[1, 0]).is_ok());
        assert!(f.permuted(&[0, 0]).is_err());
        assert!(f.permuted(&[0]).is_err());
    }

    #[test]
    fn rescale_rejects_zero_scalars() {
        let f = Frame::real(1, &[vec![1.0]]).unwrap();
        assert!(f.rescaled(&[c(0.0, 0.0)]).is_err());
        let g = f.rescaled(&[c(-2.0, 0.0)]).unwrap();
        assert_eq!(g.vector(0), &[c(-2.0, 0.0)]);
        assert_eq!(g.field(), ScalarField::Real);
    }
}
