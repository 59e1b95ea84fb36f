//! Quantitative redundancy for finite frames.
//!
//! A *frame* for a finite-dimensional Hilbert space is any finite spanning
//! family of vectors — an overcomplete basis. The classical redundancy
//! figure `N / d` (vectors per dimension) is a blunt average: it calls
//! `(e_1, e_1, e_2, e_2)` and `(e_1, e_1, e_1, e_2)` equally redundant,
//! and padding a frame with zero vectors inflates it at will. This crate
//! implements a pointwise alternative: for a unit vector `x`,
//!
//! ```text
//!     R(x) = sum_i |<x, phi_i / ||phi_i||>|^2
//! ```
//!
//! the squared correlation of `x` with the *normalized* frame (zero
//! vectors dropped). Its extremes over the unit sphere, the lower and
//! upper redundancies `R-` and `R+`, are the smallest and largest
//! eigenvalues of the frame operator of the normalized frame, and they
//! measure redundancy *directionally*: `R-` counts how many disjoint
//! spanning subfamilies the frame can be split into (at least `floor(R-)`),
//! while `R+` bounds how many linearly independent sets are needed to
//! cover it (at most `ceil(R+)`).
//!
//! # What lives where
//!
//! * [`frame`] — the [`Frame`] type: real or complex vector families,
//!   zero-vector stripping, subframes, unions, rescaling, transforms.
//! * [`operators`] — analysis/synthesis/frame operators, frame bounds,
//!   canonical dual and Parseval frames, classification.
//! * [`redundancy`] — the redundancy function, `R-`/`R+` reports, the
//!   alternative (Parseval-normalized) redundancy, invariance and
//!   additivity checks, and the eight-point desiderata audit (`D0`–`D7`).
//! * [`matroid`] — exact certificates: minimum partition into independent
//!   sets, maximum packing of disjoint spanning sets, brute-force oracles,
//!   and the projection/independence duality check.
//! * [`gallery`] — deterministic constructors for the worked examples and
//!   seeded random frames.
//! * [`truncation`] — redundancy trends along growing truncations of the
//!   infinite families.
//! * [`linalg`] — the small dense complex kernel (Jacobi eigensolver,
//!   pivoted QR) everything rests on.
//! * [`io`] — the JSON frame format.
//!
//! # Example
//!
//! ```
//! use framelab::gallery;
//! use framelab::redundancy::redundancy_bounds;
//!
//! // Five copies of e_1 plus e_2, e_3, e_4: "average" redundancy 2, but
//! // direction e_1 is covered five times and the rest only once.
//! let frame = gallery::phi2(4)?;
//! let report = redundancy_bounds(&frame)?;
//! assert!((report.lower - 1.0).abs() < 1e-9);
//! assert!((report.upper - 5.0).abs() < 1e-9);
//! assert!(!report.uniform);
//! # Ok::<(), framelab::error::FrameError>(())
//! ```
//!
//! All indices in APIs, reports, and serialized certificates are 0-based.

pub mod error;
pub mod frame;
pub mod gallery;
pub mod io;
pub mod linalg;
pub mod matroid;
pub mod operators;
pub mod redundancy;
pub mod tol;
pub mod truncation;

pub use error::{FrameError, Result};
pub use frame::{Frame, ScalarField, StrippedFrame};
pub use operators::{FrameBounds, HermitianOperator, RangeMode};
pub use redundancy::{DesiderataAudit, RedundancyReport};
