//! Reading and writing the JSON frame format.
//!
//! A frame document looks like
//!
//! ```json
//! {"field": "real", "dimension": 2, "vectors": [[1, 0], [0, 1]]}
//! ```
//!
//! Vectors are listed in frame order, one array per vector. Real frames use
//! plain numbers; complex frames use two-element `[re, im]` arrays (a plain
//! number is also accepted there and read as a real entry). The optional
//! `"labels"` array attaches one string per vector. Numbers are IEEE-754
//! doubles written in shortest round-tripping decimal, so an emitted frame
//! reloads bit-for-bit.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{FrameError, Result};
use crate::frame::{Frame, ScalarField};

#[derive(Serialize, Deserialize)]
struct FrameDocument {
    field: ScalarField,
    dimension: usize,
    vectors: Vec<Vec<EntryRepr>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

/// One scalar in a frame document: a bare number or an `[re, im]` pair.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum EntryRepr {
    Real(f64),
    Pair([f64; 2]),
}

/// Parses a frame document from JSON text.
pub fn frame_from_str(text: &str) -> Result<Frame> {
    let doc: FrameDocument =
        serde_json::from_str(text).map_err(|e| FrameError::MalformedDocument(e.to_string()))?;
    let mut vectors = Vec::with_capacity(doc.vectors.len());
    for entries in &doc.vectors {
        let mut v = Vec::with_capacity(entries.len());
        for entry in entries {
            match entry {
                EntryRepr::Real(x) => v.push(Complex64::new(*x, 0.0)),
                EntryRepr::Pair([re, im]) => {
                    if doc.field == ScalarField::Real {
                        return Err(FrameError::MalformedDocument(
                            "real frame contains a complex [re, im] entry".into(),
                        ));
                    }
                    v.push(Complex64::new(*re, *im));
                }
            }
        }
        vectors.push(v);
    }
    let mut frame = Frame::new(doc.field, doc.dimension, vectors)?;
    if let Some(labels) = doc.labels {
        frame = frame.with_labels(labels)?;
    }
    Ok(frame)
}

/// Parses a frame document from raw bytes (UTF-8).
pub fn frame_from_slice(bytes: &[u8]) -> Result<Frame> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| FrameError::MalformedDocument(format!("not UTF-8: {e}")))?;
    frame_from_str(text)
}

fn to_document(frame: &Frame) -> FrameDocument {
    let vectors = frame
        .vectors()
        .iter()
        .map(|v| {
            v.iter()
                .map(|z| match frame.field() {
                    ScalarField::Real => EntryRepr::Real(z.re),
                    ScalarField::Complex => EntryRepr::Pair([z.re, z.im]),
                })
                .collect()
        })
        .collect();
    FrameDocument {
        field: frame.field(),
        dimension: frame.dim(),
        vectors,
        labels: frame.labels().map(<[String]>::to_vec),
    }
}

/// Serializes a frame as a JSON value (for embedding in reports).
pub fn frame_to_value(frame: &Frame) -> serde_json::Value {
    serde_json::to_value(to_document(frame)).expect("frame documents always serialize")
}

/// Serializes one vector in the frame-file entry convention: bare numbers
/// for a real field, `[re, im]` pairs for a complex field.
pub fn vector_to_value(v: &[Complex64], field: ScalarField) -> serde_json::Value {
    let entries: Vec<EntryRepr> = v
        .iter()
        .map(|z| match field {
            ScalarField::Real => EntryRepr::Real(z.re),
            ScalarField::Complex => EntryRepr::Pair([z.re, z.im]),
        })
        .collect();
    serde_json::to_value(entries).expect("vectors always serialize")
}

/// Serializes a frame as pretty-printed JSON text with a trailing newline.
pub fn frame_to_string(frame: &Frame) -> String {
    let mut text = serde_json::to_string_pretty(&to_document(frame))
        .expect("frame documents always serialize");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_identity_document() {
        let f =
            frame_from_str(r#"{"field":"real","dimension":2,"vectors":[[1,0],[0,1]]}"#).unwrap();
        assert_eq!(f.dim(), 2);
        assert_eq!(f.len(), 2);
        assert_eq!(f.field(), ScalarField::Real);
        assert_eq!(
            f.vector(0),
            &[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]
        );
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let err =
            frame_from_str(r#"{"field":"real","dimension":2,"vectors":[[1,0,0]]}"#).unwrap_err();
        assert!(matches!(
            err,
            FrameError::DimensionMismatch {
                expected: 2,
                got: 3
            }
        ));
    }

    #[test]
    fn loads_complex_unit() {
        let f = frame_from_str(r#"{"field":"complex","dimension":1,"vectors":[[[0,1]]]}"#).unwrap();
        assert_eq!(f.vector(0), &[Complex64::new(0.0, 1.0)]);
        assert!((crate::frame::norm(f.vector(0)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn real_frame_rejects_pair_entries() {
        let err =
            frame_from_str(r#"{"field":"real","dimension":1,"vectors":[[[1,2]]]}"#).unwrap_err();
        assert!(matches!(err, FrameError::MalformedDocument(_)));
    }

    #[test]
    fn malformed_json_rejected() {
        assert!(matches!(
            frame_from_str("{not json"),
            Err(FrameError::MalformedDocument(_))
        ));
        assert!(matches!(
            frame_from_str(r#"{"field":"real","dimension":2,"vectors":[]}"#),
            Err(FrameError::EmptyFrame)
        ));
    }

    #[test]
    fn round_trip_is_exact() {
        let f = Frame::real(2, &[vec![0.1, 0.2], vec![1.0 / 3.0, -0.7]])
            .unwrap()
            .with_labels(vec!["a".into(), "b".into()])
            .unwrap();
        let text = frame_to_string(&f);
        let g = frame_from_str(&text).unwrap();
        assert_eq!(f, g);

        let h = Frame::complex(
            1,
            vec![vec![Complex64::new(std::f64::consts::FRAC_1_SQRT_2, -0.25)]],
        )
        .unwrap();
        let text = frame_to_string(&h);
        assert_eq!(frame_from_str(&text).unwrap(), h);
    }
}
