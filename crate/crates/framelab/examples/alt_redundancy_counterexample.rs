//! Why the redundancy function is computed on the normalized frame and
//! not on the canonical Parseval frame.
//!
//! An alternative definition first maps the frame to its canonical
//! Parseval version (apply the inverse square root of the frame operator)
//! and then measures redundancy. That variant gains full invariance under
//! invertible operators — but it loses the combinatorial meaning. The
//! counterexample family below is an equal-norm-free Parseval frame of
//! `3n - 2` vectors whose minimum partition into independent sets is 3
//! for every `n`, while the alternative upper redundancy grows linearly
//! with `n`: a bound "unrelated to the number of linearly independent
//! sets".
//!
//! Run with `cargo run --example alt_redundancy_counterexample`.

use framelab::error::Result;
use framelab::gallery;
use framelab::matroid::{min_independent_partition, LinearMatroid};
use framelab::redundancy::{
    alt_redundancy_bounds, check_invariance, redundancy_bounds, FrameTransform,
};

fn main() -> Result<()> {
    println!("  n   vectors   partition   standard R+   alternative R+");
    for n in 4..=8 {
        let frame = gallery::notes_counterexample(n)?;
        let strip = frame.strip_and_normalize()?;
        let partition = min_independent_partition(&LinearMatroid::new(&strip.frame))?;
        let standard = redundancy_bounds(&frame)?;
        let alt = alt_redundancy_bounds(&frame)?;
        println!(
            "  {n}   {:^7}   {:^9}   {:>11.4}   {:>14.4}",
            frame.len(),
            partition.count(),
            standard.upper,
            alt.upper
        );
    }

    // What the alternative buys: exact invariance under any invertible
    // transform, not just unitaries.
    let frame = gallery::notes_counterexample(5)?;
    let t = gallery::random_invertible(5, 21);
    let report = check_invariance(&frame, &FrameTransform::Invertible(t))?;
    println!(
        "\nalternative redundancy under a random invertible transform:\n  max spectrum deviation {:.3e} (tolerance {:.1e}) -> passed = {}",
        report.max_deviation, report.tolerance, report.passed
    );

    // And what it costs: the partition stays at 3 while the alternative
    // upper bound keeps climbing, so ceil(alt R+) stops being a valid
    // cover bound certificate.
    println!("\nthe standard upper bound stays honest: ceil(R+) >= partition count at every n;");
    println!("the alternative upper bound drifts away from the combinatorics entirely.");
    Ok(())
}
