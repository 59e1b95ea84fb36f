//! Exact combinatorial certificates: minimum independent partitions and
//! maximum disjoint spanning packings, cross-checked against brute force.
//!
//! The two matroid quantities bracket the redundancy bounds: a unit-norm
//! frame contains at least `floor(R-)` pairwise disjoint spanning subsets
//! and can be covered by at most `ceil(R+)` linearly independent sets.
//!
//! Run with `cargo run --example partition_and_packing`.

use framelab::error::Result;
use framelab::frame::Frame;
use framelab::gallery;
use framelab::matroid::{
    brute_force_max_packing, brute_force_min_partition, max_disjoint_spanning_sets,
    min_independent_partition, LinearMatroid,
};
use framelab::redundancy::redundancy_bounds;

fn certify(name: &str, frame: &Frame) -> Result<()> {
    let strip = frame.strip_and_normalize()?;
    let matroid = LinearMatroid::new(&strip.frame);
    let partition = min_independent_partition(&matroid)?;
    let packing = max_disjoint_spanning_sets(&matroid)?;
    let report = redundancy_bounds(frame)?;
    println!("{name}:");
    println!("  R- = {:.4}, R+ = {:.4}", report.lower, report.upper);
    println!(
        "  min partition into independent sets: {}",
        partition.count()
    );
    for part in &partition.parts {
        println!("    part {part:?}");
    }
    println!(
        "  max packing of disjoint spanning sets: {}",
        packing.count()
    );
    for set in &packing.sets {
        println!("    set  {set:?}");
    }
    if !packing.leftover.is_empty() {
        println!("    left {:?}", packing.leftover);
    }
    println!(
        "  brackets: floor(R-) = {} <= packing, partition <= ceil(R+) = {}",
        report.lower.floor() as usize,
        report.upper.ceil() as usize
    );
    Ok(())
}

fn main() -> Result<()> {
    certify("phi1(4) — doubled basis", &gallery::phi1(4)?)?;
    println!();
    certify("phi2(4) — spiked frame", &gallery::phi2(4)?)?;
    println!();
    certify(
        "union of 3 ONBs in dimension 4",
        &gallery::union_of_onbs(4, 3, 17)?,
    )?;

    // For small ground sets an exhaustive search confirms the augmenting
    // path algorithm exactly.
    println!("\nbrute-force cross-check on seeded random frames (d=3, N=7):");
    for seed in 0..5 {
        let frame = gallery::random_frame(3, 7, seed)?;
        let matroid = LinearMatroid::new(&frame);
        let fast = (
            min_independent_partition(&matroid)?.count(),
            max_disjoint_spanning_sets(&matroid)?.count(),
        );
        let exact = (
            brute_force_min_partition(&matroid)?,
            brute_force_max_packing(&matroid)?,
        );
        assert_eq!(fast, exact);
        println!(
            "  seed {seed}: partition {}, packing {} (oracle agrees)",
            fast.0, fast.1
        );
    }
    Ok(())
}
