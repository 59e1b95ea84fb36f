//! Deterministic constructors for the worked example frames, plus seeded
//! random frames and transforms.
//!
//! Every constructor is a pure function of its parameters (and seed), so
//! tests and reports can cite constructions instead of number literals and
//! every platform reproduces bit-identical frames. The named families:
//!
//! * [`phi1`] — each standard basis vector doubled; redundancy exactly 2.
//! * [`phi2`] — `n + 1` copies of `e_1` plus the rest of the basis; the
//!   classic example where averaged redundancy hides a spike.
//! * [`phi3`] — a basis interleaved with zero vectors; exercises stripping.
//! * [`phi4`] — a basis perturbed toward `e_1`, with an orthonormal tail.
//! * [`dft_subset_parseval`] — rows of the unitary discrete Fourier matrix;
//!   an exact equal-norm Parseval frame with redundancy `m / |E|`.
//! * [`union_of_onbs`] — `k` orthonormal bases scaled by `1/sqrt(k)`.
//! * [`notes_counterexample`] — the equal-norm Parseval frame whose
//!   alternative redundancy grows without bound while its partition number
//!   stays at 3.
//!
//! Seeded generators use ChaCha8 so that a `(parameters, seed)` pair pins
//! the output exactly.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{FrameError, Result};
use crate::frame::{inner, Frame, ScalarField};
use crate::linalg::{hermitian_eigen, orthonormal_columns, Mat};
use crate::operators::HermitianOperator;

fn basis(dim: usize, i: usize) -> Vec<Complex64> {
    let mut v = vec![Complex64::new(0.0, 0.0); dim];
    v[i] = Complex64::new(1.0, 0.0);
    v
}

/// `(e_1, e_1, e_2, e_2, ..., e_n, e_n)`: every basis vector doubled.
pub fn phi1(n: usize) -> Result<Frame> {
    if n < 1 {
        return Err(FrameError::InvalidParameter("phi1 requires n >= 1".into()));
    }
    let mut vectors = Vec::with_capacity(2 * n);
    for i in 0..n {
        vectors.push(basis(n, i));
        vectors.push(basis(n, i));
    }
    Frame::new(ScalarField::Real, n, vectors)
}

/// `n + 1` copies of `e_1` followed by `e_2, ..., e_n` (2n vectors total).
pub fn phi2(n: usize) -> Result<Frame> {
    if n < 1 {
        return Err(FrameError::InvalidParameter("phi2 requires n >= 1".into()));
    }
    let mut vectors = Vec::with_capacity(2 * n);
    for _ in 0..=n {
        vectors.push(basis(n, 0));
    }
    for i in 1..n {
        vectors.push(basis(n, i));
    }
    Frame::new(ScalarField::Real, n, vectors)
}

/// `(e_1, 0, e_2, 0, ..., e_n, 0)`: a basis interleaved with zero vectors.
pub fn phi3(n: usize) -> Result<Frame> {
    if n < 1 {
        return Err(FrameError::InvalidParameter("phi3 requires n >= 1".into()));
    }
    let mut vectors = Vec::with_capacity(2 * n);
    for i in 0..n {
        vectors.push(basis(n, i));
        vectors.push(vec![Complex64::new(0.0, 0.0); n]);
    }
    Frame::new(ScalarField::Real, n, vectors)
}

/// The perturbed-basis frame in dimension `m`: `e_1`, then
/// `sqrt(1 - eps^2) e_1 + eps e_i` for `i = 2..n`, then the orthonormal
/// tail `e_i` for `i = n+1..m`. Requires `2 <= n <= m` and `0 < eps < 1`.
pub fn phi4(n: usize, eps: f64, m: usize) -> Result<Frame> {
    if n < 2 || n > m {
        return Err(FrameError::InvalidParameter(format!(
            "phi4 requires 2 <= n <= m, got n={n}, m={m}"
        )));
    }
    if !(eps > 0.0 && eps < 1.0) {
        return Err(FrameError::InvalidParameter(format!(
            "phi4 requires 0 < eps < 1, got {eps}"
        )));
    }
    let head = (1.0 - eps * eps).sqrt();
    let mut vectors = Vec::with_capacity(m);
    vectors.push(basis(m, 0));
    for i in 1..n {
        let mut v = basis(m, i);
        for entry in v.iter_mut() {
            *entry *= eps;
        }
        v[0] = Complex64::new(head, 0.0);
        vectors.push(v);
    }
    for i in n..m {
        vectors.push(basis(m, i));
    }
    Frame::new(ScalarField::Real, m, vectors)
}

/// The `m` columns of the rows of the unitary `m x m` discrete Fourier
/// matrix indexed by `rows`. An exact equal-norm Parseval frame for its
/// `|rows|`-dimensional space, with every norm squared equal to `|rows|/m`.
pub fn dft_subset_parseval(m: usize, rows: &[usize]) -> Result<Frame> {
    if m < 1 {
        return Err(FrameError::InvalidParameter("dft requires m >= 1".into()));
    }
    let mut e: Vec<usize> = rows.to_vec();
    e.sort_unstable();
    e.dedup();
    if e.is_empty() {
        return Err(FrameError::InvalidParameter(
            "dft requires a nonempty row set".into(),
        ));
    }
    if let Some(&bad) = e.iter().find(|&&r| r >= m) {
        return Err(FrameError::IndexOutOfRange { index: bad, n: m });
    }
    let scale = 1.0 / (m as f64).sqrt();
    let vectors = (0..m)
        .map(|k| {
            e.iter()
                .map(|&j| {
                    let angle = -TAU * ((j * k) % m) as f64 / m as f64;
                    Complex64::from_polar(scale, angle)
                })
                .collect()
        })
        .collect();
    Frame::complex(e.len(), vectors)
}

/// `k` orthonormal bases of dimension `d`, each scaled by `1/sqrt(k)`:
/// first the standard basis, then `k - 1` seeded random bases. Parseval
/// with uniform redundancy `k`.
pub fn union_of_onbs(d: usize, k: usize, seed: u64) -> Result<Frame> {
    if d < 1 || k < 1 {
        return Err(FrameError::InvalidParameter(format!(
            "union of bases requires d >= 1 and k >= 1, got d={d}, k={k}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale = Complex64::new(1.0 / (k as f64).sqrt(), 0.0);
    let mut vectors = Vec::with_capacity(k * d);
    for i in 0..d {
        vectors.push(basis(d, i).into_iter().map(|z| z * scale).collect());
    }
    for _ in 1..k {
        let u = unitary_from_rng(d, &mut rng);
        for c in 0..d {
            vectors.push(u.column(c).into_iter().map(|z| z * scale).collect());
        }
    }
    Frame::complex(d, vectors)
}

/// The `2(n - 1)` vectors `(e_1 +/- e_i) / sqrt(2n)` for `i = 2..n`, in
/// pairs. Its frame operator has eigenvalues `(n-1)/n, 1/n, ..., 1/n`.
pub fn notes_plus_minus_family(n: usize) -> Result<Frame> {
    if n < 2 {
        return Err(FrameError::InvalidParameter(
            "the plus-minus family requires n >= 2".into(),
        ));
    }
    let a = 1.0 / (2.0 * n as f64).sqrt();
    let mut vectors = Vec::with_capacity(2 * (n - 1));
    for i in 1..n {
        for sign in [1.0, -1.0] {
            let mut v = vec![Complex64::new(0.0, 0.0); n];
            v[0] = Complex64::new(a, 0.0);
            v[i] = Complex64::new(sign * a, 0.0);
            vectors.push(v);
        }
    }
    Frame::new(ScalarField::Real, n, vectors)
}

/// The plus-minus family completed to a Parseval frame by appending
/// `e_1 / sqrt(n)` and the rescaled basis tail `sqrt(1 - 1/n) e_i`:
/// `3n - 2` vectors whose frame operator is exactly the identity. Its
/// minimum independent partition stays at 3 for every `n >= 3` while the
/// alternative redundancy grows with `n`.
pub fn notes_counterexample(n: usize) -> Result<Frame> {
    let family = notes_plus_minus_family(n)?;
    let mut vectors: Vec<Vec<Complex64>> = family.vectors().to_vec();
    let mut spike = vec![Complex64::new(0.0, 0.0); n];
    spike[0] = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
    vectors.push(spike);
    let tail = (1.0 - 1.0 / n as f64).sqrt();
    for i in 1..n {
        let mut v = vec![Complex64::new(0.0, 0.0); n];
        v[i] = Complex64::new(tail, 0.0);
        vectors.push(v);
    }
    Frame::new(ScalarField::Real, n, vectors)
}

fn gaussian_vector(field: ScalarField, dim: usize, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    (0..dim)
        .map(|_| {
            let re: f64 = rng.sample(StandardNormal);
            match field {
                ScalarField::Real => Complex64::new(re, 0.0),
                ScalarField::Complex => {
                    let im: f64 = rng.sample(StandardNormal);
                    Complex64::new(re, im)
                }
            }
        })
        .collect()
}

fn unitary_from_rng(d: usize, rng: &mut ChaCha8Rng) -> Mat {
    loop {
        let cols: Vec<Vec<Complex64>> = (0..d)
            .map(|_| gaussian_vector(ScalarField::Complex, d, rng))
            .collect();
        if let Ok(q) = orthonormal_columns(&Mat::from_columns(&cols)) {
            return q;
        }
    }
}

/// Ratio `sigma_min / sigma_max` of the matrix with the given columns,
/// where `sigma_min` is the `min(dim, count)`-th singular value.
fn condition_ratio(columns: &[Vec<Complex64>], dim: usize) -> f64 {
    let k = columns.len();
    let side = k.min(dim);
    let mut gram = Mat::zeros(side, side);
    if k <= dim {
        for a in 0..side {
            for b in 0..side {
                gram[(a, b)] = inner(&columns[b], &columns[a]);
            }
        }
    } else {
        for r in 0..dim {
            for c in 0..dim {
                let mut s = Complex64::new(0.0, 0.0);
                for col in columns {
                    s += col[r] * col[c].conj();
                }
                gram[(r, c)] = s;
            }
        }
    }
    match hermitian_eigen(&gram) {
        Ok(eig) => {
            let hi = eig.max();
            if hi <= 0.0 {
                0.0
            } else {
                (eig.min().max(0.0) / hi).sqrt()
            }
        }
        Err(_) => 0.0,
    }
}

const CONDITION_FLOOR: f64 = 1e-10;
const CONDITION_SCAN_MAX: usize = 12;
const REDRAW_LIMIT: usize = 64;

/// A draw is rejected when some subset of at most `dim` vectors is nearly
/// dependent without being exactly dependent, which could flip rank
/// decisions between the polynomial algorithms and the brute-force
/// oracles. The subset scan runs for small ground sets; larger draws are
/// only screened for spanning conditioning.
fn well_conditioned(vectors: &[Vec<Complex64>], dim: usize) -> bool {
    if condition_ratio(vectors, dim) < CONDITION_FLOOR {
        return false;
    }
    let n = vectors.len();
    if n > CONDITION_SCAN_MAX {
        return true;
    }
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < 2 || size > dim {
            continue;
        }
        let subset: Vec<Vec<Complex64>> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| vectors[i].clone())
            .collect();
        if condition_ratio(&subset, dim) < CONDITION_FLOOR {
            return false;
        }
    }
    true
}

/// `n` seeded standard-normal vectors in dimension `d`, redrawn while the
/// draw is ill-conditioned (see [`well_conditioned`]). Deterministic per
/// `(field, d, n, seed)`.
pub fn random_frame_in_field(field: ScalarField, d: usize, n: usize, seed: u64) -> Result<Frame> {
    if d < 1 || n < d {
        return Err(FrameError::InvalidParameter(format!(
            "random frame requires n >= d >= 1, got d={d}, n={n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last: Option<Vec<Vec<Complex64>>> = None;
    for _ in 0..REDRAW_LIMIT {
        let vectors: Vec<Vec<Complex64>> = (0..n)
            .map(|_| gaussian_vector(field, d, &mut rng))
            .collect();
        if well_conditioned(&vectors, d) {
            return Frame::new(field, d, vectors);
        }
        last = Some(vectors);
    }
    Frame::new(field, d, last.expect("at least one draw was made"))
}

/// Real-field version of [`random_frame_in_field`].
pub fn random_frame(d: usize, n: usize, seed: u64) -> Result<Frame> {
    random_frame_in_field(ScalarField::Real, d, n, seed)
}

/// A seeded Haar-like random unitary, via orthonormalization of a complex
/// Gaussian matrix.
pub fn random_unitary(d: usize, seed: u64) -> Mat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    unitary_from_rng(d, &mut rng)
}

/// A seeded invertible matrix `U diag(sigma) V*` with singular values
/// log-uniform in `[0.1, 10]`, so the condition number is at most 100.
pub fn random_invertible(d: usize, seed: u64) -> Mat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u = unitary_from_rng(d, &mut rng);
    let v = unitary_from_rng(d, &mut rng);
    let mut scaled = u;
    for c in 0..d {
        let sigma = 10f64.powf(rng.gen_range(-1.0..1.0));
        for r in 0..d {
            scaled[(r, c)] *= sigma;
        }
    }
    scaled.mul(&v.adjoint())
}

/// `n` seeded scalars with magnitudes in `[0.5, 2]` and uniform phases.
pub fn random_scalars(n: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let magnitude = rng.gen_range(0.5..2.0);
            let phase = rng.gen_range(0.0..TAU);
            Complex64::from_polar(magnitude, phase)
        })
        .collect()
}

/// A seeded permutation of `0..n`.
pub fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut rng);
    p
}

/// A seeded orthogonal projection of the requested rank, `B B*` for `B`
/// the first `rank` columns of a random unitary.
pub fn random_projection(m: usize, rank: usize, seed: u64) -> Result<HermitianOperator> {
    if rank > m {
        return Err(FrameError::InvalidParameter(format!(
            "projection rank {rank} exceeds dimension {m}"
        )));
    }
    if rank == 0 {
        return HermitianOperator::new(Mat::zeros(m, m));
    }
    let u = random_unitary(m, seed);
    let cols: Vec<Vec<Complex64>> = (0..rank).map(|c| u.column(c)).collect();
    let b = Mat::from_columns(&cols);
    HermitianOperator::new(b.mul(&b.adjoint()))
}
