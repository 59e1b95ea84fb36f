//! The projection/independence duality.
//!
//! For an orthogonal projection `P` and a subset `J` of standard basis
//! indices, `{P e_i : i in J}` spans the range of `P` exactly when
//! `{(I - P) e_i : i not in J}` is linearly independent. The corollary:
//! `span{e_i : i in J}` meets the range nontrivially exactly when the
//! complementary image family fails to span. Both sides are computed
//! independently by rank, so every check is a genuine test of the
//! equivalence.
//!
//! Run with `cargo run --example projection_duality`.

use framelab::error::Result;
use framelab::gallery;
use framelab::linalg::Mat;
use framelab::matroid::projection_duality_check;
use framelab::operators::HermitianOperator;
use num_complex::Complex64;

fn main() -> Result<()> {
    // Hand example: the projection onto the diagonal line in the plane.
    let half = Complex64::new(0.5, 0.0);
    let p = HermitianOperator::new(Mat::from_columns(&[vec![half, half], vec![half, half]]))?;
    let r = projection_duality_check(&p, &[0])?;
    println!("projection onto span(1,1)/sqrt(2), J = {{0}}:");
    println!(
        "  {{P e_i : i in J}} spans range(P):            {}",
        r.spans_range
    );
    println!(
        "  {{(I-P) e_i : i not in J}} independent:       {}",
        r.complement_independent
    );
    println!(
        "  span{{e_i : i in J}} meets range nontrivially: {}",
        r.subspace_meets_range
    );
    println!(
        "  {{P e_i : i not in J}} spans range(P):        {}",
        r.complement_image_spans
    );
    println!("  consistent: {}\n", r.consistent());

    // Exhaustive sweep: every subset of every seeded projection must keep
    // both equivalences. 2^m subsets per projection, zero violations.
    let mut checks = 0usize;
    for seed in 0..10 {
        let m = 3 + (seed as usize % 3);
        let rank = 1 + (seed as usize % m);
        let projection = gallery::random_projection(m, rank, seed)?;
        for mask in 0u32..(1 << m) {
            let subset: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
            let result = projection_duality_check(&projection, &subset)?;
            assert!(
                result.consistent(),
                "duality violated at seed {seed}, subset {subset:?}"
            );
            checks += 1;
        }
    }
    println!("checked {checks} (projection, subset) pairs: zero violations");
    Ok(())
}
