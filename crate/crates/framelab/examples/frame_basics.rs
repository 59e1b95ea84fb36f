//! Build frames, classify them, and run the basic operator calculus:
//! frame bounds, canonical dual, and perfect reconstruction.
//!
//! Run with `cargo run --example frame_basics`.

use framelab::error::Result;
use framelab::frame::Frame;
use framelab::gallery;
use framelab::operators::{
    canonical_dual, canonical_parseval, classify, frame_bounds, reconstruction_error,
};

fn describe(name: &str, frame: &Frame) -> Result<()> {
    let c = classify(frame)?;
    let b = frame_bounds(frame)?;
    println!(
        "{name}: {} vectors in dimension {}",
        frame.len(),
        frame.dim()
    );
    println!("  bounds        A = {:.6}, B = {:.6}", b.lower, b.upper);
    println!(
        "  classification spanning={} tight={} parseval={} equal_norm={} unit_norm={} orthogonal={}",
        c.spanning, c.tight, c.parseval, c.equal_norm, c.unit_norm, c.orthogonal
    );
    Ok(())
}

fn main() -> Result<()> {
    // A frame straight from vector literals: the Mercedes-Benz frame, the
    // equal-norm tight frame of three unit vectors in the plane.
    let third = 2.0 * std::f64::consts::PI / 3.0;
    let mercedes = Frame::real(
        2,
        &[
            vec![1.0, 0.0],
            vec![third.cos(), third.sin()],
            vec![(2.0 * third).cos(), (2.0 * third).sin()],
        ],
    )?;
    describe("mercedes-benz", &mercedes)?;

    // Gallery frames: a doubled basis and the spiked frame.
    describe("phi1(4) doubled basis", &gallery::phi1(4)?)?;
    describe("phi2(4) spiked frame", &gallery::phi2(4)?)?;

    // The canonical dual gives perfect reconstruction even for very
    // lopsided frames.
    let spiked = gallery::phi2(4)?;
    let dual = canonical_dual(&spiked)?;
    println!("\ncanonical dual of phi2(4):");
    for (i, v) in dual.vectors().iter().enumerate() {
        let entries: Vec<String> = v.iter().map(|z| format!("{:.4}", z.re)).collect();
        println!("  psi_{i} = [{}]", entries.join(", "));
    }
    let mut worst = 0.0f64;
    for i in 0..4 {
        let mut x = vec![num_complex::Complex64::new(0.0, 0.0); 4];
        x[i] = num_complex::Complex64::new(1.0, 0.0);
        worst = worst.max(reconstruction_error(&spiked, &x)?);
    }
    println!("max reconstruction error over the standard basis: {worst:.3e}");

    // The canonical Parseval frame has frame operator exactly the identity.
    let parseval = canonical_parseval(&spiked)?;
    let pb = frame_bounds(&parseval)?;
    println!(
        "canonical Parseval bounds: A = {:.12}, B = {:.12}",
        pb.lower, pb.upper
    );
    Ok(())
}
