//! The eight-point desiderata audit.
//!
//! A quantitative redundancy measure should ignore zero vectors (D0),
//! agree with the obvious answer on equal-norm Parseval frames (D1), be
//! uniform exactly for normalized-tight frames (D2) and equal to 1 exactly
//! for orthogonal families (D2'), stay positive and finite (D3), add up
//! under unions (D4), be invariant under unitaries, scalings, and
//! permutations (D5), and bracket the combinatorial facts: at least
//! floor(R-) disjoint spanning sets (D6) and at most ceil(R+) independent
//! sets in a cover (D7). The audit checks all of this on a concrete frame
//! and returns JSON certificates.
//!
//! Run with `cargo run --example desiderata_audit`.

use framelab::error::Result;
use framelab::gallery;
use framelab::redundancy::{desiderata_audit, AuditStatus};

fn main() -> Result<()> {
    for (name, frame) in [
        ("phi1(4) — doubled basis", gallery::phi1(4)?),
        ("phi3(4) — basis plus zero vectors", gallery::phi3(4)?),
        ("phi2(4) — spiked frame", gallery::phi2(4)?),
        (
            "dft(8, rows 0..4)",
            gallery::dft_subset_parseval(8, &[0, 1, 2, 3])?,
        ),
    ] {
        let audit = desiderata_audit(&frame, 7)?;
        println!("{name}  [mode: {}]", audit.mode);
        for item in &audit.desiderata {
            let status = match item.status {
                AuditStatus::Pass => "pass",
                AuditStatus::Fail => "FAIL",
                AuditStatus::NotApplicable => "n/a",
            };
            println!("  {:4} {}", item.id, status);
        }
        println!("  all passed: {}\n", audit.all_passed());
    }

    // The full certificate for one frame, as the CLI would print it.
    let audit = desiderata_audit(&gallery::phi2(4)?, 7)?;
    println!("full certificate for phi2(4):");
    println!(
        "{}",
        serde_json::to_string_pretty(&audit).expect("audit serializes")
    );
    Ok(())
}
