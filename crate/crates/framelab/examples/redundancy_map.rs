//! The redundancy function pointwise and its extremes.
//!
//! `R(x) = sum_i |<x, phi_i/||phi_i||>|^2` measures how often the frame
//! covers the direction `x`. Its minimum and maximum over the unit sphere
//! — the lower and upper redundancy — are eigenvalues of the normalized
//! frame operator, and they can differ wildly even when the naive count
//! `N / d` looks tame.
//!
//! Run with `cargo run --example redundancy_map`.

use num_complex::Complex64;

use framelab::error::Result;
use framelab::gallery;
use framelab::redundancy::{redundancy_at, redundancy_bounds};

fn unit(dim: usize, i: usize) -> Vec<Complex64> {
    let mut v = vec![Complex64::new(0.0, 0.0); dim];
    v[i] = Complex64::new(1.0, 0.0);
    v
}

fn main() -> Result<()> {
    // phi2(4): five copies of e_1 plus e_2, e_3, e_4. Eight vectors in
    // dimension four, so the naive count says "redundancy 2" — but the
    // function tells a different story.
    let spiked = gallery::phi2(4)?;
    println!(
        "phi2(4): {} vectors in dimension {}",
        spiked.len(),
        spiked.dim()
    );
    for i in 0..4 {
        let r = redundancy_at(&spiked, &unit(4, i))?;
        println!("  R(e_{}) = {r:.6}", i + 1);
    }
    let report = redundancy_bounds(&spiked)?;
    println!(
        "  R- = {:.6}, R+ = {:.6}, uniform = {}",
        report.lower, report.upper, report.uniform
    );
    println!(
        "  argmax direction: {:?}",
        report
            .argmax_vector
            .iter()
            .map(|z| z.re)
            .collect::<Vec<_>>()
    );

    // phi4(6, 0.3, 10): a basis bent toward e_1. The redundancy at e_1
    // is 1 + 5 * (1 - 0.09) = 5.55 while the bent directions carry only
    // 0.09 each; the orthonormal tail stays at exactly 1.
    let bent = gallery::phi4(6, 0.3, 10)?;
    println!("\nphi4(6, 0.3, 10):");
    for (label, x) in [
        ("e_1", unit(10, 0)),
        ("e_2", unit(10, 1)),
        ("e_7", unit(10, 6)),
    ] {
        println!("  R({label}) = {:.6}", redundancy_at(&bent, &x)?);
    }
    let report = redundancy_bounds(&bent)?;
    println!("  R- = {:.6}, R+ = {:.6}", report.lower, report.upper);

    // A uniform example: the union of three orthonormal bases has
    // R(x) = 3 in every direction.
    let union = gallery::union_of_onbs(4, 3, 11)?;
    let report = redundancy_bounds(&union)?;
    println!(
        "\nunion of 3 ONBs in dimension 4: R- = {:.9}, R+ = {:.9}, uniform = {}",
        report.lower, report.upper, report.uniform
    );

    // Basis samples come with every report: the diagonal of the
    // normalized frame operator.
    println!("\nper-basis-direction samples for phi2(4):");
    for (key, value) in &redundancy_bounds(&spiked)?.samples {
        println!("  {key}: {value:.6}");
    }
    Ok(())
}
