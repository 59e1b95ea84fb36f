//! Property-based and randomized invariant tests.

use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use framelab::frame::{Frame, ScalarField};
use framelab::gallery;
use framelab::io::{frame_from_str, frame_to_string};
use framelab::linalg::Mat;
use framelab::matroid::{max_disjoint_spanning_sets, min_independent_partition, LinearMatroid};
use framelab::operators::{frame_operator, HermitianOperator};
use framelab::redundancy::{
    additivity_check, check_invariance, redundancy_at, redundancy_bounds, FrameTransform,
};
use framelab::tol;

fn random_unit_vector(dim: usize, field: ScalarField, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    let mut v: Vec<Complex64> = (0..dim)
        .map(|_| {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = match field {
                ScalarField::Real => 0.0,
                ScalarField::Complex => StandardNormal.sample(rng),
            };
            Complex64::new(re, im)
        })
        .collect();
    let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in &mut v {
        *z /= norm;
    }
    v
}

fn seeded_frame(seed: u64) -> Frame {
    let d = 2 + (seed as usize % 3);
    let n = d + 1 + (seed as usize % 4);
    gallery::random_frame(d, n, seed).expect("random frame")
}

/// The redundancy function lives between the reported extremes on the
/// whole unit sphere.
#[test]
fn redundancy_stays_between_bounds() {
    for seed in 0..30u64 {
        let frame = seeded_frame(seed);
        let report = redundancy_bounds(&frame).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabcd);
        for _ in 0..100 {
            let x = random_unit_vector(frame.dim(), frame.field(), &mut rng);
            let value = redundancy_at(&frame, &x).unwrap();
            assert!(
                value >= report.lower - 1e-9 && value <= report.upper + 1e-9,
                "seed {seed}: R(x) = {value} outside [{}, {}]",
                report.lower,
                report.upper
            );
        }
    }
}

/// Partition and packing certificates bracket the redundancy interval:
/// `floor(R-) <= packing` and `partition <= ceil(R+)`, with the trivial
/// count sandwich `packing <= N / r <= partition` in between.
#[test]
fn certificates_bracket_redundancy() {
    let mut frames: Vec<Frame> = (0..60u64).map(seeded_frame).collect();
    frames.push(gallery::phi1(4).unwrap());
    frames.push(gallery::phi2(4).unwrap());
    frames.push(gallery::union_of_onbs(3, 4, 2).unwrap());
    frames.push(gallery::notes_counterexample(6).unwrap());

    for frame in &frames {
        let report = redundancy_bounds(frame).unwrap();
        let matroid = LinearMatroid::new(frame);
        let partition = min_independent_partition(&matroid).unwrap().count();
        let packing = max_disjoint_spanning_sets(&matroid).unwrap().count();
        let live = matroid.n()
            - frame
                .norms()
                .iter()
                .filter(|&&n| n <= frame.zero_threshold())
                .count();
        let rank = matroid.full_rank();

        assert!(packing as f64 >= tol::floor_with_slack(report.lower));
        assert!(partition as f64 <= tol::ceil_with_slack(report.upper));
        assert!(packing * rank <= live);
        assert!(partition * rank >= live);
    }
}

/// Linear-algebraic rank is submodular:
/// `r(A u B) + r(A n B) <= r(A) + r(B)`.
#[test]
fn rank_is_submodular() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for seed in 0..25u64 {
        let frame = seeded_frame(seed);
        let matroid = LinearMatroid::new(&frame);
        let n = matroid.n();
        for _ in 0..20 {
            let a_mask: u32 = rand::Rng::gen_range(&mut rng, 0..(1u32 << n));
            let b_mask: u32 = rand::Rng::gen_range(&mut rng, 0..(1u32 << n));
            let subset =
                |mask: u32| -> Vec<usize> { (0..n).filter(|i| mask & (1 << i) != 0).collect() };
            let ra = matroid.rank(&subset(a_mask)).unwrap();
            let rb = matroid.rank(&subset(b_mask)).unwrap();
            let ru = matroid.rank(&subset(a_mask | b_mask)).unwrap();
            let ri = matroid.rank(&subset(a_mask & b_mask)).unwrap();
            assert!(ru + ri <= ra + rb, "submodularity failed at seed {seed}");
        }
    }
}

/// Standard redundancy is blind to unitaries, nonzero scalings, and
/// reorderings of the frame.
#[test]
fn standard_redundancy_invariances() {
    for seed in 0..25u64 {
        let frame = seeded_frame(seed);
        let d = frame.dim();
        let n = frame.len();
        let transforms = [
            FrameTransform::Unitary(gallery::random_unitary(d, seed + 10)),
            FrameTransform::Scalars(gallery::random_scalars(n, seed + 20)),
            FrameTransform::Permutation(gallery::random_permutation(n, seed + 30)),
        ];
        for transform in &transforms {
            let report = check_invariance(&frame, transform).unwrap();
            assert!(
                report.passed && report.max_deviation <= 1e-9,
                "seed {seed}: {} deviation {:.3e}",
                report.transform,
                report.max_deviation
            );
        }
    }
}

/// Redundancy adds over unions: `R_{F u G}(x) = R_F(x) + R_G(x)`.
#[test]
fn redundancy_is_additive_over_unions() {
    for seed in 0..25u64 {
        let frame = seeded_frame(seed);
        let partner =
            gallery::random_frame_in_field(frame.field(), frame.dim(), frame.dim() + 1, seed + 500)
                .unwrap();
        let report = additivity_check(&frame, &partner).unwrap();
        assert!(report.passed(), "additivity failed at seed {seed}");

        // Direct spot check at random points.
        let union = frame.concat(&partner).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..20 {
            let x = random_unit_vector(frame.dim(), frame.field(), &mut rng);
            let split = redundancy_at(&frame, &x).unwrap() + redundancy_at(&partner, &x).unwrap();
            let joint = redundancy_at(&union, &x).unwrap();
            assert!((split - joint).abs() <= 1e-10);
        }
    }
}

/// Malformed transforms are rejected rather than silently accepted.
#[test]
fn malformed_transforms_rejected() {
    let frame = gallery::phi1(3).unwrap();
    let not_unitary = Mat::identity(3).scale(Complex64::new(2.0, 0.0));
    assert!(check_invariance(&frame, &FrameTransform::Unitary(not_unitary)).is_err());
    let zero_scalar = vec![Complex64::new(0.0, 0.0); frame.len()];
    assert!(check_invariance(&frame, &FrameTransform::Scalars(zero_scalar)).is_err());
    let not_permutation = vec![0usize; frame.len()];
    assert!(check_invariance(&frame, &FrameTransform::Permutation(not_permutation)).is_err());
    let singular = Mat::zeros(3, 3);
    assert!(check_invariance(&frame, &FrameTransform::Invertible(singular)).is_err());
}

proptest! {
    /// Frame documents survive a serialize/parse round trip bit-for-bit,
    /// including zero vectors and denormal-scale entries.
    #[test]
    fn frame_documents_round_trip(
        dim in 1usize..5,
        n in 1usize..7,
        complex in any::<bool>(),
        scale in prop::sample::select(vec![1.0f64, 1e-8, 1e8, 1e-300]),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let field = if complex { ScalarField::Complex } else { ScalarField::Real };
        let vectors: Vec<Vec<Complex64>> = (0..n)
            .map(|i| {
                if i == n / 2 {
                    return vec![Complex64::new(0.0, 0.0); dim];
                }
                (0..dim)
                    .map(|_| {
                        let re: f64 = StandardNormal.sample(&mut rng);
                        let im: f64 = match field {
                            ScalarField::Real => 0.0,
                            ScalarField::Complex => StandardNormal.sample(&mut rng),
                        };
                        Complex64::new(re * scale, im * scale)
                    })
                    .collect()
            })
            .collect();
        let frame = Frame::new(field, dim, vectors).unwrap();
        let text = frame_to_string(&frame);
        let reloaded = frame_from_str(&text).unwrap();
        prop_assert_eq!(frame, reloaded);
    }

    /// The Jacobi eigensolver reconstructs random Hermitian matrices:
    /// `A = V diag(lambda) V*` with orthonormal `V` and ascending spectrum.
    #[test]
    fn hermitian_eigen_reconstructs(dim in 1usize..7, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let columns: Vec<Vec<Complex64>> = (0..dim)
            .map(|_| {
                (0..dim)
                    .map(|_| {
                        let re: f64 = StandardNormal.sample(&mut rng);
                        let im: f64 = StandardNormal.sample(&mut rng);
                        Complex64::new(re, im)
                    })
                    .collect()
            })
            .collect();
        let b = Mat::from_columns(&columns);
        let a = {
            let sum = b.adjoint();
            let mut cols = Vec::with_capacity(dim);
            for j in 0..dim {
                let bj = b.column(j);
                let sj = sum.column(j);
                cols.push(
                    bj.iter()
                        .zip(&sj)
                        .map(|(x, y)| (x + y) * Complex64::new(0.5, 0.0))
                        .collect::<Vec<_>>(),
                );
            }
            Mat::from_columns(&cols)
        };
        let op = HermitianOperator::new(a.clone()).unwrap();
        let eig = op.eigen().unwrap();

        prop_assert!(eig.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(eig.vectors.is_unitary(1e-10));
        // Rebuild A from the decomposition.
        let rebuilt_cols: Vec<Vec<Complex64>> = (0..dim)
            .map(|j| {
                let mut col = vec![Complex64::new(0.0, 0.0); dim];
                for k in 0..dim {
                    let vk = eig.vectors.column(k);
                    let factor = vk[j].conj() * eig.eigenvalues[k];
                    for (c, v) in col.iter_mut().zip(&vk) {
                        *c += v * factor;
                    }
                }
                col
            })
            .collect();
        let rebuilt = Mat::from_columns(&rebuilt_cols);
        let scale = a.frobenius_norm().max(1.0);
        prop_assert!(rebuilt.sub(&a).max_abs() <= 1e-10 * scale);
    }

    /// The frame operator's quadratic form matches the coefficient sum for
    /// arbitrary (not just unit) inputs.
    #[test]
    fn quadratic_form_matches_sum(seed in any::<u64>(), scale in 0.1f64..10.0) {
        let frame = seeded_frame(seed % 64);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut x = random_unit_vector(frame.dim(), frame.field(), &mut rng);
        for z in &mut x {
            *z *= scale;
        }
        let s = frame_operator(&frame);
        let quad = s.quadratic_form(&x);
        let sum: f64 = (0..frame.len())
            .map(|i| {
                let v = frame.vector(i);
                v.iter().zip(&x).map(|(phi, xi)| phi.conj() * xi).sum::<Complex64>().norm_sqr()
            })
            .sum();
        let tolerance = 1e-10 * quad.abs().max(1.0);
        prop_assert!((quad - sum).abs() <= tolerance);
    }
}
