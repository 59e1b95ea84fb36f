//! The linear matroid of a frame and the exact combinatorial certificates:
//! minimum partition into independent sets and maximum packing of disjoint
//! spanning sets, with brute-force oracles and a projection/independence
//! duality check.
//!
//! A subset of frame indices is *independent* when the corresponding vectors
//! are linearly independent (numerical rank equals cardinality). Two clean
//! combinatorial quantities bracket the redundancy of a frame:
//!
//! * [`min_independent_partition`] — the least number of independent sets
//!   that cover all indices, computed by the augmenting-path matroid
//!   partitioning algorithm. The minimum never exceeds `ceil(R+)` for a
//!   unit-norm frame.
//! * [`max_disjoint_spanning_sets`] — the largest number of pairwise
//!   disjoint subsets that each span the frame's span, computed by a binary
//!   search over a matroid-union feasibility test. The maximum is at least
//!   `floor(R-)`.
//!
//! Both routines are deterministic: elements are inserted in index order,
//! the exchange search is breadth-first, and ties always resolve toward the
//! lowest index, so certificates are reproducible across runs and platforms.
//! All independence decisions are tolerance-relative (see
//! [`LinearMatroid::tolerance`]); the brute-force oracles re-solve the same
//! optimization by exhaustive dynamic programming over subsets so the
//! polynomial algorithms can be checked exactly on small ground sets.

use std::collections::VecDeque;

use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{FrameError, Result};
use crate::frame::Frame;
use crate::linalg::{numerical_rank, orthonormal_range_basis, spectral_norm};
use crate::operators::HermitianOperator;
use crate::tol;

/// Numerical rank of a set of columns under the standard tolerance rule
/// `max(dim, count) * eps * sigma_max`.
fn columns_rank(columns: &[Vec<Complex64>], dim: usize) -> usize {
    if columns.is_empty() {
        return 0;
    }
    let sigma = spectral_norm(columns, dim);
    if sigma == 0.0 {
        return 0;
    }
    let tol = tol::rank_tolerance(dim, columns.len(), sigma);
    numerical_rank(columns, dim, tol)
}

/// Rank of columns drawn from a projection matrix, cut at the ambient
/// scale with the slack of [`tol::PROJECTION_RANK_SLACK`].
///
/// Two departures from the standard rule are deliberate. The matrix is a
/// computed object, so its structural zeros are noisy at a few
/// `eps * sigma_max(P)` and the strict data cut could straddle them.
/// And the cut is anchored at the projection's own scale (`sigma_max` of
/// a nonzero orthogonal projection is 1) rather than at the subfamily's:
/// a subfamily such as `{(I - P) e_i}` for `P = I` consists of pure
/// roundoff, and a cut relative to its own norm would promote that noise
/// to full rank.
fn projection_columns_rank(columns: &[Vec<Complex64>], dim: usize) -> usize {
    if columns.is_empty() {
        return 0;
    }
    let tol = tol::PROJECTION_RANK_SLACK * tol::rank_tolerance(dim, columns.len(), 1.0);
    numerical_rank(columns, dim, tol)
}

/// The independence structure of a frame's vectors.
#[derive(Debug, Clone)]
pub struct LinearMatroid {
    columns: Vec<Vec<Complex64>>,
    dim: usize,
    /// True for indices whose vector clears the frame's zero threshold;
    /// zero vectors are matroid loops (rank-0 singletons).
    nonzero: Vec<bool>,
    full_rank: usize,
    tolerance: f64,
    /// When set, every rank decision uses this fixed absolute tolerance
    /// instead of the per-query scaled rule.
    tolerance_override: Option<f64>,
}

impl LinearMatroid {
    pub fn new(frame: &Frame) -> LinearMatroid {
        let columns: Vec<Vec<Complex64>> = frame.vectors().to_vec();
        let dim = frame.dim();
        let threshold = frame.zero_threshold();
        let nonzero: Vec<bool> = columns
            .iter()
            .map(|c| crate::frame::norm(c) > threshold)
            .collect();
        let sigma = spectral_norm(&columns, dim);
        let tolerance = tol::rank_tolerance(dim, columns.len(), sigma);
        let live: Vec<Vec<Complex64>> = columns
            .iter()
            .zip(&nonzero)
            .filter(|(_, &nz)| nz)
            .map(|(c, _)| c.clone())
            .collect();
        let full_rank = columns_rank(&live, dim);
        LinearMatroid {
            columns,
            dim,
            nonzero,
            full_rank,
            tolerance,
            tolerance_override: None,
        }
    }

    /// Like [`LinearMatroid::new`] but with a fixed rank tolerance in
    /// place of the scaled default rule.
    pub fn with_tolerance(frame: &Frame, tolerance: f64) -> LinearMatroid {
        let mut m = LinearMatroid::new(frame);
        m.tolerance = tolerance;
        m.tolerance_override = Some(tolerance);
        let live: Vec<usize> = (0..m.n()).filter(|&i| m.nonzero[i]).collect();
        m.full_rank = m.rank_of_indices(live.iter());
        m
    }

    /// Ground-set size `N`.
    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Rank of the full ground set.
    pub fn full_rank(&self) -> usize {
        self.full_rank
    }

    /// The rank tolerance of the full ground set, echoed in certificates.
    /// Per-query decisions rescale the same rule to the selected columns.
    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    fn rank_of_indices<'a>(&self, indices: impl Iterator<Item = &'a usize>) -> usize {
        let selected: Vec<Vec<Complex64>> = indices
            .filter(|&&i| self.nonzero[i])
            .map(|&i| self.columns[i].clone())
            .collect();
        match self.tolerance_override {
            Some(t) if !selected.is_empty() => numerical_rank(&selected, self.dim, t),
            _ => columns_rank(&selected, self.dim),
        }
    }

    /// Numerical rank of the vectors at `subset` (duplicates are ignored).
    pub fn rank(&self, subset: &[usize]) -> Result<usize> {
        let mut unique: Vec<usize> = subset.to_vec();
        unique.sort_unstable();
        unique.dedup();
        for &i in &unique {
            if i >= self.n() {
                return Err(FrameError::IndexOutOfRange {
                    index: i,
                    n: self.n(),
                });
            }
        }
        Ok(self.rank_of_indices(unique.iter()))
    }

    /// Rank equals cardinality (of the deduplicated subset).
    pub fn is_independent(&self, subset: &[usize]) -> Result<bool> {
        let mut unique: Vec<usize> = subset.to_vec();
        unique.sort_unstable();
        unique.dedup();
        Ok(self.rank(&unique)? == unique.len())
    }

    /// `part + {z}` independent, assuming `part` already is.
    fn accepts(&self, part: &[usize], z: usize) -> bool {
        if !self.nonzero[z] || part.len() >= self.full_rank {
            return false;
        }
        self.rank_of_indices(part.iter().chain(std::iter::once(&z))) == part.len() + 1
    }

    /// `part - {y} + {z}` independent, assuming `part` is independent.
    fn exchangeable(&self, part: &[usize], y: usize, z: usize) -> bool {
        if !self.nonzero[z] {
            return false;
        }
        let rank =
            self.rank_of_indices(part.iter().filter(|&&e| e != y).chain(std::iter::once(&z)));
        rank == part.len()
    }
}

fn insert_sorted(part: &mut Vec<usize>, x: usize) {
    let pos = part.partition_point(|&e| e < x);
    part.insert(pos, x);
}

/// Breadth-first augmenting-path insertion of `x` into the current parts.
/// Returns true when `x` was placed (possibly after a chain of exchanges);
/// parts stay independent and pairwise disjoint throughout. Ties resolve to
/// the lowest part index and lowest element index, so the outcome is
/// deterministic.
fn augment(
    matroid: &LinearMatroid,
    parts: &mut [Vec<usize>],
    part_of: &mut [Option<usize>],
    x: usize,
) -> bool {
    let n = matroid.n();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut labeled = vec![false; n];
    labeled[x] = true;
    let mut queue = VecDeque::from([x]);

    while let Some(z) = queue.pop_front() {
        // Direct acceptance by some part other than z's own.
        let mut accepted = None;
        for (j, part) in parts.iter().enumerate() {
            if part_of[z] == Some(j) {
                continue;
            }
            if matroid.accepts(part, z) {
                accepted = Some(j);
                break;
            }
        }
        if let Some(j) = accepted {
            // Walk back to the root: each element takes the slot vacated by
            // the one after it, and x finally enters the chain's last slot.
            let mut cur = z;
            let mut dest = j;
            loop {
                let old = part_of[cur];
                if let Some(op) = old {
                    parts[op].retain(|&e| e != cur);
                }
                insert_sorted(&mut parts[dest], cur);
                part_of[cur] = Some(dest);
                if cur == x {
                    break;
                }
                dest = old.expect("every non-root element on the path is assigned");
                cur = parent[cur].expect("the path leads back to the root");
            }
            return true;
        }
        // No acceptance: label the exchange candidates of z in every part.
        for (j, part) in parts.iter().enumerate() {
            if part_of[z] == Some(j) {
                continue;
            }
            for &y in part.iter() {
                if !labeled[y] && matroid.exchangeable(part, y, z) {
                    labeled[y] = true;
                    parent[y] = Some(z);
                    queue.push_back(y);
                }
            }
        }
    }
    false
}

/// A cover of the ground set by pairwise disjoint independent sets.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    /// Sorted index sets, each independent, ordered by smallest element.
    pub parts: Vec<Vec<usize>>,
    tolerance: f64,
}

impl Partition {
    pub fn count(&self) -> usize {
        self.parts.len()
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Partition", 4)?;
        s.serialize_field("parts", &self.parts)?;
        s.serialize_field("leftover", &Vec::<usize>::new())?;
        s.serialize_field("count", &self.count())?;
        s.serialize_field("tolerance", &self.tolerance)?;
        s.end()
    }
}

/// Pairwise disjoint spanning subsets plus the unused leftover indices.
#[derive(Debug, Clone, PartialEq)]
pub struct SpanningPacking {
    /// Sorted index sets, each of full rank, ordered by smallest element.
    pub sets: Vec<Vec<usize>>,
    /// Indices in no packing set, ascending.
    pub leftover: Vec<usize>,
    tolerance: f64,
}

impl SpanningPacking {
    pub fn count(&self) -> usize {
        self.sets.len()
    }
}

impl Serialize for SpanningPacking {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SpanningPacking", 4)?;
        s.serialize_field("parts", &self.sets)?;
        s.serialize_field("leftover", &self.leftover)?;
        s.serialize_field("count", &self.count())?;
        s.serialize_field("tolerance", &self.tolerance)?;
        s.end()
    }
}

/// Partitions the ground set into the minimum number of independent sets.
/// Zero vectors cannot belong to any independent set, so the frame must be
/// stripped first.
pub fn min_independent_partition(matroid: &LinearMatroid) -> Result<Partition> {
    for i in 0..matroid.n() {
        if !matroid.nonzero[i] {
            return Err(FrameError::ZeroVector(i));
        }
    }
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut part_of: Vec<Option<usize>> = vec![None; matroid.n()];
    for x in 0..matroid.n() {
        if !augment(matroid, &mut parts, &mut part_of, x) {
            part_of[x] = Some(parts.len());
            parts.push(vec![x]);
        }
    }
    parts.sort_by_key(|p| p[0]);
    Ok(Partition {
        parts,
        tolerance: matroid.tolerance,
    })
}

/// Inserts every element into at most `k` parts, augmenting where possible;
/// rejected elements go to the leftover. The total placed count equals the
/// rank of the ground set in the union of `k` copies of the matroid.
fn union_parts(matroid: &LinearMatroid, k: usize) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut part_of: Vec<Option<usize>> = vec![None; matroid.n()];
    let mut leftover = Vec::new();
    for x in 0..matroid.n() {
        if !matroid.nonzero[x] {
            leftover.push(x);
            continue;
        }
        if augment(matroid, &mut parts, &mut part_of, x) {
            continue;
        }
        if parts.len() < k {
            part_of[x] = Some(parts.len());
            parts.push(vec![x]);
        } else {
            leftover.push(x);
        }
    }
    (parts, leftover)
}

/// Finds the maximum number of pairwise disjoint spanning subsets by binary
/// search on `k`: `k` disjoint bases exist exactly when the union of `k`
/// copies of the matroid has rank `k * full_rank`.
pub fn max_disjoint_spanning_sets(matroid: &LinearMatroid) -> Result<SpanningPacking> {
    let r = matroid.full_rank();
    if r == 0 {
        return Err(FrameError::RankZero);
    }
    let feasible = |k: usize| -> bool {
        let (parts, _) = union_parts(matroid, k);
        parts.iter().map(Vec::len).sum::<usize>() == k * r
    };
    // k = 1 is always feasible (a greedy basis); n/r is a counting bound.
    let mut lo = 1;
    let mut hi = matroid.n() / r;
    while lo < hi {
        let mid = (lo + hi + 1) / 2;
        if feasible(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    let (mut sets, leftover) = union_parts(matroid, lo);
    sets.sort_by_key(|p| p[0]);
    debug_assert!(sets.iter().all(|s| s.len() == r));
    Ok(SpanningPacking {
        sets,
        leftover,
        tolerance: matroid.tolerance,
    })
}

const BRUTE_FORCE_MAX: usize = 10;

fn brute_force_tables(matroid: &LinearMatroid) -> Result<(Vec<usize>, usize)> {
    let n = matroid.n();
    if n > BRUTE_FORCE_MAX {
        return Err(FrameError::BruteForceTooLarge {
            n,
            max: BRUTE_FORCE_MAX,
        });
    }
    let mut rank = vec![0usize; 1 << n];
    for mask in 1usize..(1 << n) {
        let indices: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        rank[mask] = matroid.rank_of_indices(indices.iter());
    }
    Ok((rank, n))
}

/// Exhaustive minimum over all partitions into independent sets, by dynamic
/// programming over subsets. Ground sets up to 10 elements.
pub fn brute_force_min_partition(matroid: &LinearMatroid) -> Result<usize> {
    for i in 0..matroid.n() {
        if !matroid.nonzero[i] {
            return Err(FrameError::ZeroVector(i));
        }
    }
    let (rank, n) = brute_force_tables(matroid)?;
    let full = 1usize << n;
    let independent: Vec<bool> = (0..full)
        .map(|m| rank[m] == (m as u32).count_ones() as usize)
        .collect();
    let mut dp = vec![usize::MAX; full];
    dp[0] = 0;
    for mask in 1..full {
        // Anchor on the lowest element to enumerate each cover once.
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        // Enumerate submasks of `rest`, each unioned with the anchor bit.
        let mut sub = rest;
        loop {
            let candidate = sub | low;
            if independent[candidate] && dp[mask ^ candidate] != usize::MAX {
                dp[mask] = dp[mask].min(1 + dp[mask ^ candidate]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    Ok(dp[full - 1])
}

/// Exhaustive maximum number of pairwise disjoint spanning subsets, by
/// dynamic programming over subsets. Ground sets up to 10 elements.
pub fn brute_force_max_packing(matroid: &LinearMatroid) -> Result<usize> {
    let r = matroid.full_rank();
    if r == 0 {
        return Err(FrameError::RankZero);
    }
    let (rank, n) = brute_force_tables(matroid)?;
    let full = 1usize << n;
    let spanning: Vec<bool> = (0..full).map(|m| rank[m] == r).collect();
    let mut dp = vec![0usize; full];
    for mask in 1..full {
        // Either drop the lowest element or use it inside a spanning subset.
        let low = mask & mask.wrapping_neg();
        dp[mask] = dp[mask ^ low];
        let rest = mask ^ low;
        let mut sub = rest;
        loop {
            let candidate = sub | low;
            if spanning[candidate] {
                dp[mask] = dp[mask].max(1 + dp[mask ^ candidate]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    Ok(dp[full - 1])
}

/// Outcome of the projection/independence duality check for one subset.
#[derive(Debug, Clone, Serialize)]
pub struct DualityResult {
    /// The subset `J` (0-based indices into the standard basis).
    pub subset: Vec<usize>,
    /// `{P e_i : i in J}` spans the range of `P`.
    pub spans_range: bool,
    /// `{(I - P) e_i : i not in J}` is linearly independent.
    pub complement_independent: bool,
    /// `span{e_i : i in J}` meets the range of `P` nontrivially.
    pub subspace_meets_range: bool,
    /// `{P e_i : i not in J}` spans the range of `P`.
    pub complement_image_spans: bool,
}

impl DualityResult {
    /// The two dual statements agree, and so do the two corollary sides.
    pub fn consistent(&self) -> bool {
        self.spans_range == self.complement_independent
            && self.subspace_meets_range == !self.complement_image_spans
    }
}

/// Checks, for an orthogonal projection `P` and a subset `J` of standard
/// basis indices, the duality
///
/// ```text
///   {P e_i}_{i in J} spans P(H)   <=>   {(I-P) e_i}_{i not in J} independent
/// ```
///
/// together with the corollary: `span{e_i}_{i in J}` meets `P(H)`
/// nontrivially exactly when `{P e_i}_{i not in J}` fails to span `P(H)`.
/// Both sides of each statement are computed independently by rank; the
/// caller asserts they agree.
pub fn projection_duality_check(
    projection: &HermitianOperator,
    subset: &[usize],
) -> Result<DualityResult> {
    projection.validate_projection()?;
    let m = projection.dim();
    let mut in_subset = vec![false; m];
    for &i in subset {
        if i >= m {
            return Err(FrameError::IndexOutOfRange { index: i, n: m });
        }
        in_subset[i] = true;
    }
    let j: Vec<usize> = (0..m).filter(|&i| in_subset[i]).collect();
    let jc: Vec<usize> = (0..m).filter(|&i| !in_subset[i]).collect();

    let p = projection.mat();
    let rank_p = {
        let cols: Vec<Vec<Complex64>> = (0..m).map(|i| p.column(i)).collect();
        projection_columns_rank(&cols, m)
    };

    // {P e_i} is column i of P; {(I - P) e_i} is column i of I - P.
    let p_cols_j: Vec<Vec<Complex64>> = j.iter().map(|&i| p.column(i)).collect();
    let spans_range = projection_columns_rank(&p_cols_j, m) == rank_p;

    let q_cols_jc: Vec<Vec<Complex64>> = jc
        .iter()
        .map(|&i| {
            let mut col = p.column(i);
            for (r, entry) in col.iter_mut().enumerate() {
                *entry = if r == i {
                    Complex64::new(1.0, 0.0) - *entry
                } else {
                    -*entry
                };
            }
            col
        })
        .collect();
    let complement_independent = projection_columns_rank(&q_cols_jc, m) == jc.len();

    // Corollary, left side: span{e_i}_J meets range(P) iff stacking the
    // basis vectors of J next to an orthonormal basis of range(P) drops rank.
    let range_basis = {
        let cols: Vec<Vec<Complex64>> = (0..m).map(|i| p.column(i)).collect();
        let sigma = spectral_norm(&cols, m);
        if sigma == 0.0 {
            Vec::new()
        } else {
            let cut = tol::PROJECTION_RANK_SLACK * tol::rank_tolerance(m, m, 1.0);
            orthonormal_range_basis(&cols, m, cut)
        }
    };
    let mut stacked: Vec<Vec<Complex64>> = j
        .iter()
        .map(|&i| {
            let mut e = vec![Complex64::new(0.0, 0.0); m];
            e[i] = Complex64::new(1.0, 0.0);
            e
        })
        .collect();
    stacked.extend(range_basis.iter().cloned());
    let subspace_meets_range = projection_columns_rank(&stacked, m) < j.len() + rank_p;

    // Corollary, right side.
    let p_cols_jc: Vec<Vec<Complex64>> = jc.iter().map(|&i| p.column(i)).collect();
    let complement_image_spans = projection_columns_rank(&p_cols_jc, m) == rank_p;

    Ok(DualityResult {
        subset: j,
        spans_range,
        complement_independent,
        subspace_meets_range,
        complement_image_spans,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::linalg::Mat;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn rank_examples() {
        let doubled = LinearMatroid::new(&gallery::phi1(4).unwrap());
        assert_eq!(doubled.rank(&[0, 1]).unwrap(), 1);
        assert_eq!(doubled.full_rank(), 4);

        let spiked = LinearMatroid::new(&gallery::phi2(4).unwrap());
        assert_eq!(spiked.rank(&(0..8).collect::<Vec<_>>()).unwrap(), 4);

        let perturbed = LinearMatroid::new(&gallery::phi4(6, 0.3, 10).unwrap());
        assert_eq!(perturbed.rank(&[0, 1, 2, 3, 4, 5]).unwrap(), 6);
    }

    #[test]
    fn zero_vectors_are_loops() {
        let f = Frame::real(2, &[vec![1.0, 0.0], vec![0.0, 0.0]]).unwrap();
        let m = LinearMatroid::new(&f);
        assert_eq!(m.rank(&[1]).unwrap(), 0);
        assert_eq!(m.rank(&[0, 1]).unwrap(), 1);
        assert!(matches!(
            min_independent_partition(&m),
            Err(FrameError::ZeroVector(1))
        ));
    }

    #[test]
    fn partition_counts_on_gallery() {
        let doubled = LinearMatroid::new(&gallery::phi1(4).unwrap());
        assert_eq!(min_independent_partition(&doubled).unwrap().count(), 2);

        let spiked = LinearMatroid::new(&gallery::phi2(4).unwrap());
        let p = min_independent_partition(&spiked).unwrap();
        assert_eq!(p.count(), 5);
        for part in &p.parts {
            assert!(spiked.is_independent(part).unwrap());
        }

        let notes = LinearMatroid::new(&gallery::notes_counterexample(4).unwrap());
        assert_eq!(min_independent_partition(&notes).unwrap().count(), 3);
    }

    #[test]
    fn packing_counts_on_gallery() {
        let doubled = LinearMatroid::new(&gallery::phi1(4).unwrap());
        let packing = max_disjoint_spanning_sets(&doubled).unwrap();
        assert_eq!(packing.count(), 2);
        assert!(packing.leftover.is_empty());

        let spiked = LinearMatroid::new(&gallery::phi2(4).unwrap());
        let packing = max_disjoint_spanning_sets(&spiked).unwrap();
        assert_eq!(packing.count(), 1);
        assert_eq!(packing.sets[0].len(), 4);

        let onbs = LinearMatroid::new(&gallery::union_of_onbs(4, 3, 17).unwrap());
        assert_eq!(max_disjoint_spanning_sets(&onbs).unwrap().count(), 3);
    }

    #[test]
    fn partition_certificate_covers_disjointly() {
        let m = LinearMatroid::new(&gallery::notes_counterexample(5).unwrap());
        let p = min_independent_partition(&m).unwrap();
        let mut seen = vec![false; m.n()];
        for part in &p.parts {
            assert_eq!(m.rank(part).unwrap(), part.len());
            for &i in part {
                assert!(!seen[i], "index {i} appears twice");
                seen[i] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn packing_certificate_spans_disjointly() {
        let m = LinearMatroid::new(&gallery::union_of_onbs(3, 2, 5).unwrap());
        let packing = max_disjoint_spanning_sets(&m).unwrap();
        let mut seen = vec![false; m.n()];
        for set in &packing.sets {
            assert_eq!(m.rank(set).unwrap(), m.full_rank());
            for &i in set {
                assert!(!seen[i]);
                seen[i] = true;
            }
        }
        for &i in &packing.leftover {
            assert!(!seen[i]);
            seen[i] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn brute_force_small_cases() {
        let doubled = LinearMatroid::new(&gallery::phi1(2).unwrap());
        assert_eq!(brute_force_min_partition(&doubled).unwrap(), 2);
        assert_eq!(brute_force_max_packing(&doubled).unwrap(), 2);

        // Three copies of e_1 and one e_2.
        let f = Frame::real(
            2,
            &[
                vec![1.0, 0.0],
                vec![1.0, 0.0],
                vec![1.0, 0.0],
                vec![0.0, 1.0],
            ],
        )
        .unwrap();
        let m = LinearMatroid::new(&f);
        assert_eq!(brute_force_min_partition(&m).unwrap(), 3);
        assert_eq!(brute_force_max_packing(&m).unwrap(), 1);
        assert_eq!(min_independent_partition(&m).unwrap().count(), 3);
        assert_eq!(max_disjoint_spanning_sets(&m).unwrap().count(), 1);

        let onb = LinearMatroid::new(
            &gallery::phi3(2)
                .unwrap()
                .strip_and_normalize()
                .unwrap()
                .frame,
        );
        assert_eq!(brute_force_min_partition(&onb).unwrap(), 1);
        assert_eq!(brute_force_max_packing(&onb).unwrap(), 1);
    }

    #[test]
    fn brute_force_limit() {
        let f = gallery::phi1(6).unwrap();
        let m = LinearMatroid::new(&f);
        assert!(matches!(
            brute_force_min_partition(&m),
            Err(FrameError::BruteForceTooLarge { n: 12, max: 10 })
        ));
    }

    #[test]
    fn oracle_agreement_on_seeded_frames() {
        for seed in 0..20 {
            let d = 2 + (seed as usize % 3);
            let n = d + 2 + (seed as usize % 3);
            let f = gallery::random_frame(d, n, seed).unwrap();
            let m = LinearMatroid::new(&f);
            assert_eq!(
                min_independent_partition(&m).unwrap().count(),
                brute_force_min_partition(&m).unwrap(),
                "partition mismatch at seed {seed}"
            );
            assert_eq!(
                max_disjoint_spanning_sets(&m).unwrap().count(),
                brute_force_max_packing(&m).unwrap(),
                "packing mismatch at seed {seed}"
            );
        }
    }

    #[test]
    fn rank_is_submodular_spot_check() {
        let f = gallery::random_frame(3, 7, 33).unwrap();
        let m = LinearMatroid::new(&f);
        let a = vec![0, 2, 4, 6];
        let b = vec![1, 2, 5, 6];
        let ab: Vec<usize> = vec![0, 1, 2, 4, 5, 6];
        let cap = vec![2, 6];
        assert!(
            m.rank(&a).unwrap() + m.rank(&b).unwrap()
                >= m.rank(&ab).unwrap() + m.rank(&cap).unwrap()
        );
    }

    #[test]
    fn duality_hand_examples() {
        // P projects onto the diagonal line in R^2.
        let half = c(0.5);
        let p = HermitianOperator::new(Mat::from_columns(&[vec![half, half], vec![half, half]]))
            .unwrap();
        let r = projection_duality_check(&p, &[0]).unwrap();
        assert!(r.spans_range && r.complement_independent && r.consistent());
        assert!(!r.subspace_meets_range && r.complement_image_spans);

        // Identity projection, empty subset: nothing spans, and the zero
        // vectors (I - I)e_i are dependent.
        let id = HermitianOperator::new(Mat::identity(3)).unwrap();
        let r = projection_duality_check(&id, &[]).unwrap();
        assert!(!r.spans_range && !r.complement_independent && r.consistent());

        // Zero projection, empty subset: rank 0 is trivially spanned and
        // the complement family is the standard basis.
        let zero = HermitianOperator::new(Mat::zeros(3, 3)).unwrap();
        let r = projection_duality_check(&zero, &[]).unwrap();
        assert!(r.spans_range && r.complement_independent && r.consistent());
    }

    #[test]
    fn non_projection_rejected() {
        let m = Mat::identity(2).scale(c(0.5));
        let op = HermitianOperator::new(m).unwrap();
        assert!(matches!(
            projection_duality_check(&op, &[0]),
            Err(FrameError::NotAProjection(_))
        ));
    }
}
