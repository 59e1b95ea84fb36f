//! Finite truncations of the infinite families: redundancy bounds and
//! combinatorial certificates along an increasing sequence of sizes, with
//! divergence diagnostics.
//!
//! In infinite dimensions the upper redundancy can be infinite; a finite
//! computation can only watch the bounds along truncations. A study builds
//! one family at each requested size, records the redundancy bounds and
//! (for moderate ground sets) the partition/packing counts, and summarizes
//! the trend. A family is marked *apparently divergent* when every
//! consecutive upper bound grows by at least a factor of 1.5 — an
//! explicitly heuristic cutoff, echoed verbatim in the report.

use serde::Serialize;

use crate::error::{FrameError, Result};
use crate::frame::Frame;
use crate::gallery;
use crate::matroid::{max_disjoint_spanning_sets, min_independent_partition, LinearMatroid};
use crate::operators::{classify, RangeMode};
use crate::redundancy::{alt_redundancy_bounds, redundancy_bounds_in_mode};

/// One parameterized family with a single designated size parameter.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "name")]
pub enum StudyFamily {
    /// The perturbed-basis family: at size `n` the frame is
    /// `phi4(n, eps, n + m_offset)`.
    #[serde(rename = "phi4")]
    Perturbed { eps: f64, m_offset: usize },
    /// Fourier rows: at size `m` the frame keeps the first
    /// `round(ratio * m)` rows (at least one) of the `m`-point unitary
    /// discrete Fourier matrix.
    #[serde(rename = "dft")]
    DftRows { ratio: f64 },
    /// The Parseval counterexample family at size `n`.
    #[serde(rename = "notes")]
    Notes,
}

impl StudyFamily {
    fn build(&self, size: usize) -> Result<Frame> {
        match self {
            StudyFamily::Perturbed { eps, m_offset } => gallery::phi4(size, *eps, size + m_offset),
            StudyFamily::DftRows { ratio } => {
                let count = ((size as f64 * ratio).round() as usize).clamp(1, size.max(1));
                let rows: Vec<usize> = (0..count).collect();
                gallery::dft_subset_parseval(size, &rows)
            }
            StudyFamily::Notes => gallery::notes_counterexample(size),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            StudyFamily::Perturbed { eps, .. } => {
                if !(*eps > 0.0 && *eps < 1.0) {
                    return Err(FrameError::InvalidParameter(format!(
                        "study requires 0 < eps < 1, got {eps}"
                    )));
                }
            }
            StudyFamily::DftRows { ratio } => {
                if !(*ratio > 0.0 && *ratio <= 1.0) {
                    return Err(FrameError::InvalidParameter(format!(
                        "study requires 0 < ratio <= 1, got {ratio}"
                    )));
                }
            }
            StudyFamily::Notes => {}
        }
        Ok(())
    }
}

/// Ground sets larger than this skip the partition/packing computations.
pub const COMBINATORICS_LIMIT: usize = 64;

/// Results at one truncation size.
#[derive(Debug, Clone, Serialize)]
pub struct StudyRow {
    pub size: usize,
    pub r_lower: f64,
    pub r_upper: f64,
    /// `None` when the ground set exceeds [`COMBINATORICS_LIMIT`].
    pub partition: Option<usize>,
    pub packing: Option<usize>,
    /// Upper alternative-redundancy bound; recorded for the family whose
    /// point is that this quantity is unrelated to the partition count.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alt_upper: Option<f64>,
    /// Row flags: `uniform` and/or `combinatorics-skipped`.
    pub flags: Vec<String>,
}

/// Trend summary derived purely from the result rows.
#[derive(Debug, Clone, Serialize)]
pub struct StudyDiagnostics {
    /// Differences `r_upper[j+1] - r_upper[j]`.
    pub upper_deltas: Vec<f64>,
    pub lower_deltas: Vec<f64>,
    pub upper_strictly_increasing: bool,
    /// True when every consecutive upper-bound ratio is at least 1.5.
    pub apparently_divergent_upper: bool,
    pub heuristic: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct TruncationStudy {
    pub family: StudyFamily,
    pub sizes: Vec<usize>,
    pub rows: Vec<StudyRow>,
    pub diagnostics: StudyDiagnostics,
    /// Set when a constructor failed; earlier rows are kept.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aborted: Option<String>,
}

const DIVERGENCE_FACTOR: f64 = 1.5;
const HEURISTIC_NOTE: &str =
    "heuristic: flagged when every consecutive upper-bound ratio is at least 1.5";

/// Builds the family at each size and records redundancy bounds, partition
/// and packing counts, and trend diagnostics. A constructor failure stops
/// the sweep and is reported in `aborted` alongside the completed rows.
pub fn run_truncation_study(family: &StudyFamily, sizes: &[usize]) -> Result<TruncationStudy> {
    family.validate()?;
    if sizes.is_empty() {
        return Err(FrameError::InvalidParameter(
            "study requires at least one size".into(),
        ));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(FrameError::InvalidParameter(
            "study sizes must be strictly increasing".into(),
        ));
    }

    let mut rows = Vec::new();
    let mut aborted = None;
    for &size in sizes {
        let frame = match family.build(size) {
            Ok(f) => f,
            Err(e) => {
                aborted = Some(format!("constructor failed at size {size}: {e}"));
                break;
            }
        };
        match study_row(family, size, &frame) {
            Ok(row) => rows.push(row),
            Err(e) => {
                aborted = Some(format!("analysis failed at size {size}: {e}"));
                break;
            }
        }
    }

    let diagnostics = diagnose(&rows);
    Ok(TruncationStudy {
        family: family.clone(),
        sizes: sizes.to_vec(),
        rows,
        diagnostics,
        aborted,
    })
}

fn study_row(family: &StudyFamily, size: usize, frame: &Frame) -> Result<StudyRow> {
    let strip = frame.strip_and_normalize()?;
    let spanning = classify(&strip.frame)?.spanning;
    let mode = if spanning {
        RangeMode::Ambient
    } else {
        RangeMode::Restricted
    };
    let report = redundancy_bounds_in_mode(frame, mode)?;

    let mut flags = Vec::new();
    if report.uniform {
        flags.push("uniform".to_string());
    }
    let (partition, packing) = if strip.frame.len() > COMBINATORICS_LIMIT {
        flags.push("combinatorics-skipped".to_string());
        (None, None)
    } else {
        let matroid = LinearMatroid::new(&strip.frame);
        (
            Some(min_independent_partition(&matroid)?.count()),
            Some(max_disjoint_spanning_sets(&matroid)?.count()),
        )
    };
    let alt_upper = match family {
        StudyFamily::Notes => Some(alt_redundancy_bounds(frame)?.upper),
        _ => None,
    };

    Ok(StudyRow {
        size,
        r_lower: report.lower,
        r_upper: report.upper,
        partition,
        packing,
        alt_upper,
        flags,
    })
}

fn diagnose(rows: &[StudyRow]) -> StudyDiagnostics {
    let upper_deltas: Vec<f64> = rows
        .windows(2)
        .map(|w| w[1].r_upper - w[0].r_upper)
        .collect();
    let lower_deltas: Vec<f64> = rows
        .windows(2)
        .map(|w| w[1].r_lower - w[0].r_lower)
        .collect();
    let upper_strictly_increasing =
        !upper_deltas.is_empty() && upper_deltas.iter().all(|&d| d > 0.0);
    let apparently_divergent_upper = rows.len() >= 2
        && rows
            .windows(2)
            .all(|w| w[1].r_upper >= DIVERGENCE_FACTOR * w[0].r_upper);
    StudyDiagnostics {
        upper_deltas,
        lower_deltas,
        upper_strictly_increasing,
        apparently_divergent_upper,
        heuristic: HEURISTIC_NOTE,
    }
}

impl TruncationStudy {
    /// One CSV row per size: `size,r_lower,r_upper,partition,packing,flags`.
    /// Skipped combinatorics serialize as `skipped`; flags join with `;`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("size,r_lower,r_upper,partition,packing,flags\n");
        for row in &self.rows {
            let partition = row
                .partition
                .map_or_else(|| "skipped".to_string(), |c| c.to_string());
            let packing = row
                .packing
                .map_or_else(|| "skipped".to_string(), |c| c.to_string());
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                row.size,
                row.r_lower,
                row.r_upper,
                partition,
                packing,
                row.flags.join(";")
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perturbed_family_bounds_and_divergence() {
        let family = StudyFamily::Perturbed {
            eps: 0.3,
            m_offset: 4,
        };
        let study = run_truncation_study(&family, &[4, 8, 16]).unwrap();
        assert!(study.aborted.is_none());
        assert_eq!(study.rows.len(), 3);
        for row in &study.rows {
            let n = row.size as f64;
            assert!(row.r_upper >= 1.0 + (n - 1.0) * 0.91 - 1e-9);
            assert!(row.r_lower <= 0.09 + 1e-12);
            assert!(row.r_lower > 0.0);
        }
        assert!(study.diagnostics.upper_strictly_increasing);
        assert!(study.diagnostics.apparently_divergent_upper);
    }

    #[test]
    fn dft_family_is_uniform_at_every_size() {
        let family = StudyFamily::DftRows { ratio: 0.5 };
        let study = run_truncation_study(&family, &[8, 16, 32]).unwrap();
        for row in &study.rows {
            assert!((row.r_lower - 2.0).abs() <= 1e-9);
            assert!((row.r_upper - 2.0).abs() <= 1e-9);
            assert!(row.flags.iter().any(|f| f == "uniform"));
        }
        assert!(!study.diagnostics.apparently_divergent_upper);
    }

    #[test]
    fn notes_family_partition_constant_while_alt_grows() {
        let family = StudyFamily::Notes;
        let study = run_truncation_study(&family, &[4, 6, 8]).unwrap();
        let alts: Vec<f64> = study.rows.iter().map(|r| r.alt_upper.unwrap()).collect();
        for pair in alts.windows(2) {
            assert!(pair[1] > pair[0], "alternative upper bound should grow");
        }
        for row in &study.rows {
            assert_eq!(row.partition, Some(3));
        }
        assert!(study.diagnostics.upper_strictly_increasing);
    }

    #[test]
    fn large_sizes_skip_combinatorics() {
        let family = StudyFamily::DftRows { ratio: 0.5 };
        let study = run_truncation_study(&family, &[128]).unwrap();
        let row = &study.rows[0];
        assert_eq!(row.partition, None);
        assert_eq!(row.packing, None);
        assert!(row.flags.iter().any(|f| f == "combinatorics-skipped"));
    }

    #[test]
    fn constructor_failure_keeps_partial_rows() {
        let family = StudyFamily::Perturbed {
            eps: 0.3,
            m_offset: 4,
        };
        let study = run_truncation_study(&family, &[1, 4]).unwrap();
        assert!(study.rows.is_empty());
        assert!(study.aborted.is_some());

        let study = run_truncation_study(&StudyFamily::Notes, &[4, 6]).unwrap();
        assert!(study.aborted.is_none());
    }

    #[test]
    fn studies_are_reproducible() {
        let family = StudyFamily::DftRows { ratio: 0.5 };
        let a = run_truncation_study(&family, &[8, 16]).unwrap();
        let b = run_truncation_study(&family, &[8, 16]).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        assert_eq!(a.to_csv(), b.to_csv());
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(run_truncation_study(&StudyFamily::Notes, &[]).is_err());
        assert!(run_truncation_study(&StudyFamily::Notes, &[4, 4]).is_err());
        assert!(run_truncation_study(&StudyFamily::DftRows { ratio: 0.0 }, &[8]).is_err());
        assert!(run_truncation_study(
            &StudyFamily::Perturbed {
                eps: 1.0,
                m_offset: 4
            },
            &[4]
        )
        .is_err());
    }
}
