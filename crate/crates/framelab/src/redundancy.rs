//! The redundancy function, upper and lower redundancy, the alternative
//! redundancy, and the desiderata audit.
//!
//! For a family `Phi = (phi_i)` the redundancy function on the unit sphere is
//!
//! ```text
//!   R(x) = sum_i || P_i x ||^2 = sum_i |inner(x, phi_i / ||phi_i||)|^2,
//! ```
//!
//! where `P_i` projects onto the line spanned by `phi_i` and zero vectors are
//! dropped first: every direction counts once, regardless of how the vectors
//! are scaled. `R` is the quadratic form of `S_norm`, the frame operator of
//! the zero-stripped, normalized family, so its extrema over the sphere —
//! the *lower* and *upper redundancy* `R-` and `R+` — are the extreme
//! eigenvalues of `S_norm`, attained at the corresponding eigenvectors.
//! Redundancy is *uniform* when `R- = R+` (within a relative tolerance),
//! which happens exactly when the normalized family is tight.
//!
//! The *alternative redundancy* applies the same construction to the
//! canonical Parseval frame `(S^{-1/2} phi_i)` instead; it is invariant under
//! every invertible operator on the space, but its upper value is unrelated
//! to the combinatorics of independent sets (see the
//! `alt_redundancy_counterexample` example), which is why the plain version
//! is the primary notion.
//!
//! [`desiderata_audit`] runs the checklist D0–D7 that a quantitative notion
//! of redundancy should satisfy — zero vectors do not count (D0), equal-norm
//! Parseval frames are uniform with value N/d (D1), uniformity is tightness
//! of the normalization and value 1 is orthogonality (D2/D2'), values are
//! positive and finite (D3), redundancy adds under unions (D4), it is
//! invariant under unitaries, scalings, and permutations (D5), and it counts
//! disjoint spanning sets from below (D6) and independent partitions from
//! above (D7) — and returns one certificate per item.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

use crate::error::{FrameError, Result};
use crate::frame::{inner, norm, scaled, Frame, ScalarField};
use crate::io::vector_to_value;
use crate::linalg::Mat;
use crate::matroid::{max_disjoint_spanning_sets, min_independent_partition, LinearMatroid};
use crate::operators::{
    canonical_parseval, classify, frame_bounds_in_mode, frame_operator, frame_spectrum,
    FrameBounds, RangeMode,
};
use crate::tol;

/// Lower and upper redundancy with the witnesses that attain them.
#[derive(Debug, Clone)]
pub struct RedundancyReport {
    /// `R-`: the minimum of the redundancy function over the unit sphere.
    pub lower: f64,
    /// `R+`: the maximum.
    pub upper: f64,
    /// `upper - lower <= UNIFORM_REL * upper`.
    pub uniform: bool,
    /// Unit vector attaining `lower` (an extreme eigenvector of `S_norm`).
    pub argmin_vector: Vec<Complex64>,
    /// Unit vector attaining `upper`.
    pub argmax_vector: Vec<Complex64>,
    /// Redundancy sampled at each ambient standard basis vector, keyed
    /// `"e0"`, `"e1"`, ... (0-based).
    pub samples: BTreeMap<String, f64>,
    /// Whether the spectrum was read in the ambient space or on the span.
    pub mode: RangeMode,
    /// 0-based indices of zero vectors dropped before normalization.
    pub dropped: Vec<usize>,
    field: ScalarField,
}

impl RedundancyReport {
    pub fn mode_str(&self) -> &'static str {
        match self.mode {
            RangeMode::Ambient => "ambient",
            RangeMode::Restricted => "range-restricted",
        }
    }

    /// JSON form with fixed field names (`lower`, `upper`, `uniform`,
    /// `argmin_vector`, `argmax_vector`, `samples`, `mode`, `dropped`).
    pub fn to_value(&self) -> serde_json::Value {
        json!({
            "lower": self.lower,
            "upper": self.upper,
            "uniform": self.uniform,
            "argmin_vector": vector_to_value(&self.argmin_vector, self.field),
            "argmax_vector": vector_to_value(&self.argmax_vector, self.field),
            "samples": self.samples,
            "mode": self.mode_str(),
            "dropped": self.dropped,
        })
    }
}

fn unit_input(frame: &Frame, x: &[Complex64]) -> Result<Vec<Complex64>> {
    if x.len() != frame.dim() {
        return Err(FrameError::DimensionMismatch {
            expected: frame.dim(),
            got: x.len(),
        });
    }
    let n = norm(x);
    if n == 0.0 {
        return Err(FrameError::InvalidParameter(
            "the redundancy function is defined on the unit sphere; got the zero vector".into(),
        ));
    }
    // Inputs within the unit-norm slack pass through; anything else is
    // normalized here so the value always refers to the sphere.
    if (n - 1.0).abs() <= tol::UNIT_NORM_SLACK {
        Ok(x.to_vec())
    } else {
        Ok(scaled(x, Complex64::new(1.0 / n, 0.0)))
    }
}

/// `R(x)` by direct summation of `|inner(x, phi_i/||phi_i||)|^2` over the
/// zero-stripped frame. `x` is normalized internally if needed.
pub fn redundancy_at(frame: &Frame, x: &[Complex64]) -> Result<f64> {
    let strip = frame.strip_and_normalize()?;
    let unit = unit_input(frame, x)?;
    Ok(strip
        .frame
        .vectors()
        .iter()
        .map(|phi| inner(&unit, phi).norm_sqr())
        .sum())
}

/// `R(x)` as the quadratic form `inner(S_norm x, x)` — an independent code
/// path used to cross-check [`redundancy_at`].
pub fn redundancy_at_quadratic(frame: &Frame, x: &[Complex64]) -> Result<f64> {
    let strip = frame.strip_and_normalize()?;
    let unit = unit_input(frame, x)?;
    Ok(frame_operator(&strip.frame).quadratic_form(&unit))
}

/// `R-` and `R+` as the extreme eigenvalues of `S_norm`, ambient mode.
pub fn redundancy_bounds(frame: &Frame) -> Result<RedundancyReport> {
    redundancy_bounds_in_mode(frame, RangeMode::Ambient)
}

/// `R-` and `R+` in the chosen [`RangeMode`]. In restricted mode the
/// spectrum is read on the span of the frame, so `R-` is the smallest
/// nonzero value and the reported eigenvectors still live in ambient
/// coordinates.
pub fn redundancy_bounds_in_mode(frame: &Frame, mode: RangeMode) -> Result<RedundancyReport> {
    let strip = frame.strip_and_normalize()?;
    let spectrum = frame_spectrum(&strip.frame, mode)?;
    let lower = spectrum.min().max(0.0);
    let upper = spectrum.max().max(0.0);
    let uniform = upper > 0.0 && upper - lower <= tol::UNIFORM_REL * upper;

    let s_norm = frame_operator(&strip.frame);
    let mut samples = BTreeMap::new();
    for j in 0..frame.dim() {
        samples.insert(format!("e{j}"), s_norm.mat()[(j, j)].re);
    }

    Ok(RedundancyReport {
        lower,
        upper,
        uniform,
        argmin_vector: spectrum.eigenvector(0),
        argmax_vector: spectrum.eigenvector(spectrum.eigenvalues.len() - 1),
        samples,
        mode,
        dropped: strip.dropped,
        field: strip.frame.field(),
    })
}

/// True when `R- = R+` within the uniformity tolerance.
pub fn is_uniform(frame: &Frame) -> Result<bool> {
    Ok(redundancy_bounds(frame)?.uniform)
}

/// Alternative redundancy at `x`: the redundancy function of the canonical
/// Parseval frame `(S^{-1/2} phi_i)`. Requires a spanning frame.
pub fn alt_redundancy_at(frame: &Frame, x: &[Complex64]) -> Result<f64> {
    let parseval = canonical_parseval(frame)?;
    redundancy_at(&parseval, x)
}

/// Alternative `R-`/`R+`: the bounds of the normalized canonical Parseval
/// frame. Requires a spanning frame.
pub fn alt_redundancy_bounds(frame: &Frame) -> Result<RedundancyReport> {
    alt_redundancy_bounds_in_mode(frame, RangeMode::Ambient)
}

/// Alternative bounds in the chosen mode.
pub fn alt_redundancy_bounds_in_mode(frame: &Frame, mode: RangeMode) -> Result<RedundancyReport> {
    let parseval = canonical_parseval(frame)?;
    redundancy_bounds_in_mode(&parseval, mode)
}

/// A transform to test redundancy invariance against.
#[derive(Debug, Clone)]
pub enum FrameTransform {
    /// Apply a unitary to every vector; standard redundancy is invariant.
    Unitary(Mat),
    /// Scale vector `i` by `scalars[i]` (all nonzero); invariant.
    Scalars(Vec<Complex64>),
    /// Reorder the vectors; invariant.
    Permutation(Vec<usize>),
    /// Apply an arbitrary invertible operator; only the *alternative*
    /// redundancy is invariant under these.
    Invertible(Mat),
}

impl FrameTransform {
    pub fn name(&self) -> &'static str {
        match self {
            FrameTransform::Unitary(_) => "unitary",
            FrameTransform::Scalars(_) => "scalars",
            FrameTransform::Permutation(_) => "permutation",
            FrameTransform::Invertible(_) => "invertible",
        }
    }
}

/// Result of an invariance check: the largest difference between the sorted
/// spectra of the relevant normalized frame operators before and after.
#[derive(Debug, Clone, Serialize)]
pub struct InvarianceReport {
    pub transform: &'static str,
    /// `"standard"` for unitary/scalars/permutation, `"alternative"` for
    /// invertible transforms.
    pub redundancy: &'static str,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Sorted spectrum of `S_norm` (ambient), the invariant object behind D5.
fn standard_spectrum(frame: &Frame) -> Result<Vec<f64>> {
    let strip = frame.strip_and_normalize()?;
    Ok(frame_spectrum(&strip.frame, RangeMode::Ambient)?.eigenvalues)
}

fn alternative_spectrum(frame: &Frame) -> Result<Vec<f64>> {
    standard_spectrum(&canonical_parseval(frame)?)
}

fn spectra_deviation(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Applies the transform, recomputes the relevant redundancy spectrum, and
/// reports the largest eigenvalue deviation. Malformed transforms (a
/// non-unitary matrix for [`FrameTransform::Unitary`], zero scalars, a
/// non-permutation, a singular matrix) are rejected.
pub fn check_invariance(frame: &Frame, transform: &FrameTransform) -> Result<InvarianceReport> {
    let (before, after, redundancy, tolerance) = match transform {
        FrameTransform::Unitary(u) => {
            if !u.is_unitary(tol::UNITARY_TOL) {
                return Err(FrameError::MalformedTransform(format!(
                    "matrix is not unitary within {:.1e}",
                    tol::UNITARY_TOL
                )));
            }
            let g = frame.transformed(u)?;
            (
                standard_spectrum(frame)?,
                standard_spectrum(&g)?,
                "standard",
                tol::INVARIANCE_TOL,
            )
        }
        FrameTransform::Scalars(c) => {
            let g = frame.rescaled(c)?;
            (
                standard_spectrum(frame)?,
                standard_spectrum(&g)?,
                "standard",
                tol::INVARIANCE_TOL,
            )
        }
        FrameTransform::Permutation(p) => {
            let g = frame.permuted(p)?;
            (
                standard_spectrum(frame)?,
                standard_spectrum(&g)?,
                "standard",
                tol::INVARIANCE_TOL,
            )
        }
        FrameTransform::Invertible(t) => {
            if t.rows() != frame.dim() || !t.is_invertible() {
                return Err(FrameError::MalformedTransform(
                    "matrix is singular or mis-sized; invariance holds only for invertible operators"
                        .into(),
                ));
            }
            let g = frame.transformed(t)?;
            (
                alternative_spectrum(frame)?,
                alternative_spectrum(&g)?,
                "alternative",
                tol::ALT_INVARIANCE_TOL,
            )
        }
    };
    let max_deviation = spectra_deviation(&before, &after);
    Ok(InvarianceReport {
        transform: transform.name(),
        redundancy,
        max_deviation,
        tolerance,
        passed: max_deviation <= tolerance,
    })
}

/// One line of the additivity report. For inequalities `slack` is the margin
/// by which the inequality holds (negative = violated); for the equality
/// cases it is the absolute deviation from equality.
#[derive(Debug, Clone, Serialize)]
pub struct AdditivityCheck {
    pub name: &'static str,
    pub applicable: bool,
    pub holds: bool,
    pub slack: f64,
}

/// Redundancy additivity under concatenation `Phi ∪ Phi'`.
#[derive(Debug, Clone, Serialize)]
pub struct AdditivityReport {
    pub first: FrameBounds,
    pub second: FrameBounds,
    pub union: FrameBounds,
    pub checks: Vec<AdditivityCheck>,
}

impl AdditivityReport {
    /// The two unconditional inequalities hold and every applicable equality
    /// check holds.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !c.applicable || c.holds)
    }
}

fn redundancy_bounds_pair(frame: &Frame) -> Result<FrameBounds> {
    let r = redundancy_bounds(frame)?;
    Ok(FrameBounds {
        lower: r.lower,
        upper: r.upper,
    })
}

/// Checks, for the concatenation of two families in the same dimension:
/// `R-` superadditivity, `R+` subadditivity, the exact `+1` shift when the
/// second family is an orthonormal basis, and exact additivity when both
/// are uniform. Frames over different scalar fields are promoted to the
/// complex field before concatenation.
pub fn additivity_check(frame: &Frame, other: &Frame) -> Result<AdditivityReport> {
    let (a, b) = if frame.field() != other.field() {
        (frame.to_complex(), other.to_complex())
    } else {
        (frame.clone(), other.clone())
    };
    let union = a.concat(&b)?;

    let fb = redundancy_bounds_pair(&a)?;
    let sb = redundancy_bounds_pair(&b)?;
    let ub = redundancy_bounds_pair(&union)?;

    let mut checks = Vec::new();

    let lower_slack = ub.lower - (fb.lower + sb.lower);
    checks.push(AdditivityCheck {
        name: "lower-superadditive",
        applicable: true,
        holds: lower_slack >= -tol::INVARIANCE_TOL * ub.lower.max(1.0),
        slack: lower_slack,
    });

    let upper_slack = (fb.upper + sb.upper) - ub.upper;
    checks.push(AdditivityCheck {
        name: "upper-subadditive",
        applicable: true,
        holds: upper_slack >= -tol::INVARIANCE_TOL * ub.upper.max(1.0),
        slack: upper_slack,
    });

    let other_flags = classify(&b)?;
    let other_is_onb = other_flags.orthogonal && other_flags.unit_norm && b.len() == b.dim();
    let onb_deviation = (ub.lower - fb.lower - 1.0)
        .abs()
        .max((ub.upper - fb.upper - 1.0).abs());
    checks.push(AdditivityCheck {
        name: "onb-union-adds-one",
        applicable: other_is_onb,
        holds: onb_deviation <= tol::INVARIANCE_TOL,
        slack: onb_deviation,
    });

    let first_uniform = fb.upper > 0.0 && fb.upper - fb.lower <= tol::UNIFORM_REL * fb.upper;
    let second_uniform = sb.upper > 0.0 && sb.upper - sb.lower <= tol::UNIFORM_REL * sb.upper;
    let uniform_deviation = (ub.lower - fb.lower - sb.lower)
        .abs()
        .max((ub.upper - fb.upper - sb.upper).abs());
    checks.push(AdditivityCheck {
        name: "uniform-exact-additivity",
        applicable: first_uniform && second_uniform,
        holds: uniform_deviation <= tol::INVARIANCE_TOL,
        slack: uniform_deviation,
    });

    Ok(AdditivityReport {
        first: fb,
        second: sb,
        union: ub,
        checks,
    })
}

/// Status of one desideratum in the audit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuditStatus {
    Pass,
    Fail,
    NotApplicable,
}

/// One audited desideratum with its certificate.
#[derive(Debug, Clone, Serialize)]
pub struct AuditItem {
    pub id: &'static str,
    pub status: AuditStatus,
    pub witness: serde_json::Value,
    pub seed: u64,
}

impl AuditItem {
    fn new(id: &'static str, status: AuditStatus, witness: serde_json::Value, seed: u64) -> Self {
        AuditItem {
            id,
            status,
            witness,
            seed,
        }
    }
}

/// The full D0–D7 audit of one frame.
#[derive(Debug, Clone, Serialize)]
pub struct DesiderataAudit {
    pub desiderata: Vec<AuditItem>,
    pub seed: u64,
    /// `"ambient"` when the stripped frame spans, else `"range-restricted"`.
    pub mode: &'static str,
    pub dropped: Vec<usize>,
}

impl DesiderataAudit {
    pub fn all_passed(&self) -> bool {
        self.desiderata
            .iter()
            .all(|d| d.status != AuditStatus::Fail)
    }

    pub fn item(&self, id: &str) -> Option<&AuditItem> {
        self.desiderata.iter().find(|d| d.id == id)
    }
}

fn standard_onb(dim: usize, field: ScalarField) -> Frame {
    let vectors = (0..dim)
        .map(|i| {
            let mut v = vec![Complex64::new(0.0, 0.0); dim];
            v[i] = Complex64::new(1.0, 0.0);
            v
        })
        .collect();
    Frame::new(field, dim, vectors).expect("standard basis is a valid frame")
}

/// Runs the desiderata checklist D0–D7 (with D2 split into D2 and D2') and
/// returns one pass/fail/not-applicable record per item, each carrying a
/// witness or certificate. Randomized witnesses (the D4 union partner and
/// the D5 transforms) are drawn deterministically from `seed` and offsets
/// `seed+1`, `seed+2`, all recorded in the output.
pub fn desiderata_audit(frame: &Frame, seed: u64) -> Result<DesiderataAudit> {
    let mut items = Vec::new();

    let strip = match frame.strip_and_normalize() {
        Ok(s) => s,
        Err(FrameError::AllZero) => {
            let dropped: Vec<usize> = (0..frame.len()).collect();
            items.push(AuditItem::new(
                "D0",
                AuditStatus::Pass,
                json!({ "dropped": dropped, "count": frame.len(),
                        "note": "every vector is zero; nothing remains to measure" }),
                seed,
            ));
            for id in ["D1", "D2", "D2'", "D3", "D4", "D5", "D6", "D7"] {
                items.push(AuditItem::new(
                    id,
                    AuditStatus::NotApplicable,
                    json!("no nonzero vectors"),
                    seed,
                ));
            }
            return Ok(DesiderataAudit {
                desiderata: items,
                seed,
                mode: "ambient",
                dropped,
            });
        }
        Err(e) => return Err(e),
    };

    let spanning = classify(&strip.frame)?.spanning;
    let mode = if spanning {
        RangeMode::Ambient
    } else {
        RangeMode::Restricted
    };
    let mode_str = if spanning {
        "ambient"
    } else {
        "range-restricted"
    };
    let report = redundancy_bounds_in_mode(frame, mode)?;

    // D0: zero vectors are dropped before anything is measured.
    items.push(AuditItem::new(
        "D0",
        AuditStatus::Pass,
        json!({ "dropped": strip.dropped, "count": strip.dropped.len() }),
        seed,
    ));

    // D1: an equal-norm Parseval frame (on its span) has uniform redundancy.
    let flags = classify(frame)?;
    let span_bounds = frame_bounds_in_mode(frame, mode)?;
    let parseval_on_span = (span_bounds.lower - 1.0).abs() <= tol::CLASSIFY_REL
        && (span_bounds.upper - 1.0).abs() <= tol::CLASSIFY_REL;
    if flags.equal_norm && parseval_on_span {
        items.push(AuditItem::new(
            "D1",
            if report.uniform {
                AuditStatus::Pass
            } else {
                AuditStatus::Fail
            },
            json!({ "uniform": report.uniform, "redundancy": report.upper }),
            seed,
        ));
    } else {
        items.push(AuditItem::new(
            "D1",
            AuditStatus::NotApplicable,
            json!("frame is not equal-norm Parseval"),
            seed,
        ));
    }

    // D2: uniform redundancy iff the normalized frame is tight.
    let norm_bounds = frame_bounds_in_mode(&strip.frame, mode)?;
    let normalized_tight = norm_bounds.upper > 0.0
        && norm_bounds.upper - norm_bounds.lower <= tol::CLASSIFY_REL * norm_bounds.upper;
    items.push(AuditItem::new(
        "D2",
        if report.uniform == normalized_tight {
            AuditStatus::Pass
        } else {
            AuditStatus::Fail
        },
        json!({ "uniform": report.uniform, "normalized_tight": normalized_tight }),
        seed,
    ));

    // D2': redundancy identically 1 iff the stripped frame is orthogonal.
    let value_one = (report.lower - 1.0).abs() <= tol::CLASSIFY_REL
        && (report.upper - 1.0).abs() <= tol::CLASSIFY_REL;
    let orthogonal = classify(&strip.frame)?.orthogonal;
    items.push(AuditItem::new(
        "D2'",
        if value_one == orthogonal {
            AuditStatus::Pass
        } else {
            AuditStatus::Fail
        },
        json!({ "redundancy_one": value_one, "orthogonal": orthogonal,
                "lower": report.lower, "upper": report.upper }),
        seed,
    ));

    // D3: 0 < R- <= R+ < infinity.
    let d3 = report.lower > 0.0 && report.lower <= report.upper && report.upper.is_finite();
    items.push(AuditItem::new(
        "D3",
        if d3 {
            AuditStatus::Pass
        } else {
            AuditStatus::Fail
        },
        json!({ "lower": report.lower, "upper": report.upper }),
        seed,
    ));

    // D4: adjoining an orthonormal basis shifts both bounds by exactly 1;
    // general unions obey the super/subadditivity inequalities.
    let ambient_before = redundancy_bounds(frame)?;
    let onb = standard_onb(frame.dim(), frame.field());
    let with_onb = frame.concat(&onb)?;
    let ambient_after = redundancy_bounds(&with_onb)?;
    let shift_deviation = (ambient_after.lower - ambient_before.lower - 1.0)
        .abs()
        .max((ambient_after.upper - ambient_before.upper - 1.0).abs());
    let shift_ok = shift_deviation <= tol::INVARIANCE_TOL;
    let partner =
        crate::gallery::random_frame_in_field(frame.field(), frame.dim(), frame.dim() + 2, seed)?;
    let union_report = additivity_check(frame, &partner)?;
    let inequalities_ok = union_report.checks[0].holds && union_report.checks[1].holds;
    items.push(AuditItem::new(
        "D4",
        if shift_ok && inequalities_ok {
            AuditStatus::Pass
        } else {
            AuditStatus::Fail
        },
        json!({
            "onb_shift_deviation": shift_deviation,
            "union_partner": { "kind": "random", "n": frame.dim() + 2, "seed": seed },
            "lower_superadditive_slack": union_report.checks[0].slack,
            "upper_subadditive_slack": union_report.checks[1].slack,
        }),
        seed,
    ));

    // D5: invariance under a random unitary, random nonzero scalars, and a
    // random permutation.
    let unitary = crate::gallery::random_unitary(frame.dim(), seed);
    let scalars = crate::gallery::random_scalars(frame.len(), seed.wrapping_add(1));
    let permutation = crate::gallery::random_permutation(frame.len(), seed.wrapping_add(2));
    let mut d5_deviation: f64 = 0.0;
    let mut d5_ok = true;
    let mut d5_details = serde_json::Map::new();
    for transform in [
        FrameTransform::Unitary(unitary),
        FrameTransform::Scalars(scalars),
        FrameTransform::Permutation(permutation),
    ] {
        let inv = check_invariance(frame, &transform)?;
        d5_deviation = d5_deviation.max(inv.max_deviation);
        d5_ok &= inv.passed;
        d5_details.insert(inv.transform.to_string(), json!(inv.max_deviation));
    }
    items.push(AuditItem::new(
        "D5",
        if d5_ok {
            AuditStatus::Pass
        } else {
            AuditStatus::Fail
        },
        json!({ "max_deviation": d5_deviation, "per_transform": d5_details,
                "tolerance": tol::INVARIANCE_TOL }),
        seed,
    ));

    // D6: at least floor(R-) pairwise disjoint spanning subsets.
    let matroid = LinearMatroid::new(&strip.frame);
    let packing = max_disjoint_spanning_sets(&matroid)?;
    let floor_lower = tol::floor_with_slack(report.lower) as usize;
    let d6 = packing.count() >= floor_lower;
    items.push(AuditItem::new(
        "D6",
        if d6 {
            AuditStatus::Pass
        } else {
            AuditStatus::Fail
        },
        json!({ "floor_lower": floor_lower, "packing": packing }),
        seed,
    ));

    // D7: a partition into at most ceil(R+) linearly independent subsets.
    let partition = min_independent_partition(&matroid)?;
    let ceil_upper = tol::ceil_with_slack(report.upper) as usize;
    let d7 = partition.count() <= ceil_upper;
    items.push(AuditItem::new(
        "D7",
        if d7 {
            AuditStatus::Pass
        } else {
            AuditStatus::Fail
        },
        json!({ "ceil_upper": ceil_upper, "partition": partition }),
        seed,
    ));

    Ok(DesiderataAudit {
        desiderata: items,
        seed,
        mode: mode_str,
        dropped: strip.dropped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    fn e(i: usize, d: usize) -> Vec<Complex64> {
        let mut v = vec![Complex64::new(0.0, 0.0); d];
        v[i] = Complex64::new(1.0, 0.0);
        v
    }

    #[test]
    fn doubled_onb_is_uniform_two() {
        let f = gallery::phi1(4).unwrap();
        let r = redundancy_bounds(&f).unwrap();
        assert!((r.lower - 2.0).abs() < 1e-12);
        assert!((r.upper - 2.0).abs() < 1e-12);
        assert!(r.uniform);
        assert!(is_uniform(&f).unwrap());
    }

    #[test]
    fn spiked_frame_bounds_one_five() {
        let f = gallery::phi2(4).unwrap();
        let r = redundancy_bounds(&f).unwrap();
        assert!((r.lower - 1.0).abs() < 1e-12);
        assert!((r.upper - 5.0).abs() < 1e-12);
        assert!(!r.uniform);
        // The extreme eigenvectors attain the extreme values.
        assert!((redundancy_at(&f, &r.argmax_vector).unwrap() - r.upper).abs() < 1e-8);
        assert!((redundancy_at(&f, &r.argmin_vector).unwrap() - r.lower).abs() < 1e-8);
    }

    #[test]
    fn zero_padded_onb_has_redundancy_one() {
        let f = gallery::phi3(4).unwrap();
        let r = redundancy_bounds(&f).unwrap();
        assert_eq!(r.dropped, vec![1, 3, 5, 7]);
        assert!((r.lower - 1.0).abs() < 1e-12);
        assert!((r.upper - 1.0).abs() < 1e-12);
        assert!(r.uniform);
    }

    #[test]
    fn perturbed_family_matches_closed_forms() {
        let f = gallery::phi4(6, 0.3, 10).unwrap();
        // 1 + (N-1)(1-eps^2) at e_1 and eps^2 at e_2.
        let at_e1 = redundancy_at(&f, &e(0, 10)).unwrap();
        assert!((at_e1 - 5.55).abs() < 1e-12, "got {at_e1}");
        let at_e2 = redundancy_at(&f, &e(1, 10)).unwrap();
        assert!((at_e2 - 0.09).abs() < 1e-12, "got {at_e2}");
        // Tail vectors past the perturbed block are orthonormal.
        let at_e7 = redundancy_at(&f, &e(6, 10)).unwrap();
        assert!((at_e7 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn two_paths_agree() {
        let f = gallery::phi4(6, 0.3, 10).unwrap();
        let x: Vec<Complex64> = (0..10)
            .map(|k| Complex64::new((k as f64 * 0.37).sin(), (k as f64 * 0.11).cos()))
            .collect();
        let a = redundancy_at(&f, &x).unwrap();
        let b = redundancy_at_quadratic(&f, &x).unwrap();
        assert!((a - b).abs() < 1e-10 * a.max(1.0));
    }

    #[test]
    fn onb_redundancy_is_one_everywhere() {
        let f = standard_onb(3, ScalarField::Real);
        let x = [
            Complex64::new(0.6, 0.0),
            Complex64::new(0.0, 0.8),
            Complex64::new(0.0, 0.0),
        ];
        assert!((redundancy_at(&f, &x).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn alt_equals_standard_on_parseval() {
        let f = gallery::dft_subset_parseval(8, &[0, 1, 2, 3]).unwrap();
        let r = redundancy_bounds_in_mode(&f, RangeMode::Restricted).unwrap();
        let alt = alt_redundancy_bounds_in_mode(&f, RangeMode::Restricted).unwrap();
        assert!((r.lower - alt.lower).abs() < 1e-9);
        assert!((r.upper - alt.upper).abs() < 1e-9);
        assert!((r.upper - 2.0).abs() < 1e-9);
    }

    #[test]
    fn alt_requires_spanning() {
        let f = Frame::real(2, &[vec![1.0, 0.0]]).unwrap();
        assert!(matches!(
            alt_redundancy_bounds(&f),
            Err(FrameError::NonSpanning { .. })
        ));
    }

    #[test]
    fn permutation_invariance_is_exact() {
        let f = gallery::phi2(4).unwrap();
        let n = f.len();
        let reversed: Vec<usize> = (0..n).rev().collect();
        let report = check_invariance(&f, &FrameTransform::Permutation(reversed)).unwrap();
        assert_eq!(report.max_deviation, 0.0);
        assert!(report.passed);
    }

    #[test]
    fn scalar_invariance() {
        let f = gallery::phi1(2).unwrap();
        let mut scalars = vec![Complex64::new(1.0, 0.0); 4];
        scalars[0] = Complex64::new(3.0, 0.0);
        let report = check_invariance(&f, &FrameTransform::Scalars(scalars)).unwrap();
        assert!(report.passed, "deviation {}", report.max_deviation);
    }

    #[test]
    fn unitary_invariance_seeded() {
        let f = gallery::phi4(6, 0.3, 10).unwrap();
        let u = gallery::random_unitary(10, 42);
        let report = check_invariance(&f, &FrameTransform::Unitary(u)).unwrap();
        assert!(
            report.max_deviation <= 1e-9,
            "deviation {}",
            report.max_deviation
        );
    }

    #[test]
    fn malformed_transforms_rejected() {
        let f = gallery::phi1(2).unwrap();
        let not_unitary = Mat::identity(2).scale(Complex64::new(2.0, 0.0));
        assert!(check_invariance(&f, &FrameTransform::Unitary(not_unitary)).is_err());
        let singular = Mat::zeros(2, 2);
        assert!(check_invariance(&f, &FrameTransform::Invertible(singular)).is_err());
    }

    #[test]
    fn additivity_spiked_plus_onb() {
        let f = gallery::phi2(4).unwrap();
        let onb = standard_onb(4, ScalarField::Real);
        let report = additivity_check(&f, &onb).unwrap();
        assert!((report.union.lower - 2.0).abs() < 1e-12);
        assert!((report.union.upper - 6.0).abs() < 1e-12);
        let onb_check = report
            .checks
            .iter()
            .find(|c| c.name == "onb-union-adds-one")
            .unwrap();
        assert!(onb_check.applicable && onb_check.holds);
        assert!(report.passed());
    }

    #[test]
    fn additivity_uniform_union() {
        let f = gallery::phi1(2).unwrap();
        let report = additivity_check(&f, &f).unwrap();
        assert!((report.union.lower - 4.0).abs() < 1e-12);
        assert!((report.union.upper - 4.0).abs() < 1e-12);
        let uni = report
            .checks
            .iter()
            .find(|c| c.name == "uniform-exact-additivity")
            .unwrap();
        assert!(uni.applicable && uni.holds);
    }

    #[test]
    fn audit_zero_padded_frame() {
        let audit = desiderata_audit(&gallery::phi3(4).unwrap(), 7).unwrap();
        assert!(audit.all_passed());
        assert_eq!(audit.dropped, vec![1, 3, 5, 7]);
        let d0 = audit.item("D0").unwrap();
        assert_eq!(d0.status, AuditStatus::Pass);
        assert_eq!(d0.witness["count"], json!(4));
        let d2p = audit.item("D2'").unwrap();
        assert_eq!(d2p.status, AuditStatus::Pass);
        assert_eq!(d2p.witness["orthogonal"], json!(true));
    }

    #[test]
    fn audit_spiked_frame_certificates() {
        let audit = desiderata_audit(&gallery::phi2(4).unwrap(), 7).unwrap();
        assert!(audit.all_passed());
        let d6 = audit.item("D6").unwrap();
        assert_eq!(d6.witness["packing"]["count"], json!(1));
        let d7 = audit.item("D7").unwrap();
        assert_eq!(d7.witness["partition"]["count"], json!(5));
        assert_eq!(d7.witness["ceil_upper"], json!(5));
    }

    #[test]
    fn audit_all_zero_frame() {
        let f = Frame::real(2, &[vec![0.0, 0.0], vec![0.0, 0.0]]).unwrap();
        let audit = desiderata_audit(&f, 1).unwrap();
        assert_eq!(audit.item("D0").unwrap().status, AuditStatus::Pass);
        assert_eq!(audit.item("D3").unwrap().status, AuditStatus::NotApplicable);
        assert!(audit.all_passed());
    }

    #[test]
    fn audit_determinism() {
        let f = gallery::phi4(4, 0.5, 6).unwrap();
        let a = desiderata_audit(&f, 99).unwrap();
        let b = desiderata_audit(&f, 99).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
