//! Every tolerance used by the library, in one place.
//!
//! All pass/fail decisions made by this crate are tolerance-relative, so the
//! thresholds are named constants rather than inline literals, and reports
//! emitted by the CLI echo the values that were in force.

/// Relative asymmetry allowed when accepting a matrix as self-adjoint,
/// scaled by the largest entry magnitude.
pub const SELF_ADJOINT_REL: f64 = 1e-12;

/// Jacobi eigensolver: convergence when the off-diagonal Frobenius norm
/// drops below this factor times the Frobenius norm of the input.
pub const JACOBI_OFF_REL: f64 = 1e-13;

/// Jacobi eigensolver: maximum number of cyclic sweeps before giving up.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Zero-vector threshold, relative to the largest vector norm in the frame.
pub const ZERO_VECTOR_REL: f64 = 1e-12;

/// Absolute floor for the zero-vector threshold, so that a frame whose
/// largest norm underflows still strips cleanly.
pub const ZERO_VECTOR_FLOOR: f64 = 1e-300;

/// Relative tolerance for tightness, the Parseval property, and pairwise
/// orthogonality checks.
pub const CLASSIFY_REL: f64 = 1e-8;

/// Equal-norm check: max/min norm ratio must not exceed `1 + EQUAL_NORM_REL`.
pub const EQUAL_NORM_REL: f64 = 1e-8;

/// Uniform redundancy: `upper - lower <= UNIFORM_REL * upper`.
pub const UNIFORM_REL: f64 = 1e-8;

/// Relative reconstruction error allowed for the canonical-dual expansion.
pub const RECONSTRUCT_REL: f64 = 1e-8;

/// Unit-norm slack accepted before a redundancy query point is renormalized.
pub const UNIT_NORM_SLACK: f64 = 1e-10;

/// Spanning threshold for inverse powers of the frame operator: eigenvalues
/// below this factor times the largest eigenvalue mean the frame does not
/// span and `S^{-1}` / `S^{-1/2}` are refused.
pub const SPANNING_REL: f64 = 1e-12;

/// Projection validation: idempotence and self-adjointness within this bound.
pub const PROJECTION_TOL: f64 = 1e-10;

/// Unitarity validation for invariance transforms.
pub const UNITARY_TOL: f64 = 1e-10;

/// Smallest scalar magnitude accepted for a per-vector scaling transform.
pub const SCALAR_FLOOR: f64 = 1e-12;

/// Slack used when comparing redundancy values in invariance and additivity
/// checks of the standard redundancy.
pub const INVARIANCE_TOL: f64 = 1e-9;

/// Slack for invariance of the alternative redundancy under invertible
/// operators, which composes two extra eigendecompositions.
pub const ALT_INVARIANCE_TOL: f64 = 1e-7;

/// Slack applied before taking floors and ceilings of redundancy bounds in
/// the partition/packing comparisons.
pub const ROUNDING_SLACK: f64 = 1e-9;

/// Machine epsilon for `f64`, the unit used by the numerical-rank rule.
pub const EPS: f64 = f64::EPSILON;

/// Numerical-rank threshold for a set of columns: `max(d, n) * eps * sigma_max`.
pub fn rank_tolerance(dim: usize, n: usize, sigma_max: f64) -> f64 {
    dim.max(n) as f64 * EPS * sigma_max
}

/// Extra slack factor for rank decisions about projection matrices.
///
/// A projection handed to the duality check is usually assembled from
/// computed factors (an orthonormalized block, an eigendecomposition), so
/// its structurally zero singular values sit at a small multiple of
/// `eps * sigma_max` rather than strictly below the data-rank cut. The
/// slack keeps the cut far above that noise floor while staying many
/// orders of magnitude below any genuine singular value.
pub const PROJECTION_RANK_SLACK: f64 = 64.0;

/// Floor of `x` with a small forgiving slack, so that a value that is an
/// integer up to roundoff is not pushed down a step.
pub fn floor_with_slack(x: f64) -> f64 {
    (x + ROUNDING_SLACK * x.abs().max(1.0)).floor()
}

/// Ceiling of `x` with a small forgiving slack, the mirror of
/// [`floor_with_slack`].
pub fn ceil_with_slack(x: f64) -> f64 {
    (x - ROUNDING_SLACK * x.abs().max(1.0)).ceil()
}
