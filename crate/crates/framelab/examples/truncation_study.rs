//! Redundancy along growing truncations of the infinite families.
//!
//! In infinite dimensions the upper redundancy can be infinite. A study
//! computes `R-`/`R+` and the partition/packing certificates at each
//! finite size and flags apparent divergence (every consecutive `R+`
//! ratio at least 1.5 — a heuristic, and labeled as such in the report).
//!
//! Run with `cargo run --example truncation_study`.

use framelab::error::Result;
use framelab::truncation::{run_truncation_study, StudyFamily};

fn main() -> Result<()> {
    let studies = [
        (
            "perturbed basis, eps = 0.3",
            StudyFamily::Perturbed {
                eps: 0.3,
                m_offset: 4,
            },
            vec![4, 8, 16, 32],
        ),
        (
            "Fourier rows, ratio = 1/2",
            StudyFamily::DftRows { ratio: 0.5 },
            vec![8, 16, 32],
        ),
        (
            "Parseval counterexample",
            StudyFamily::Notes,
            vec![4, 6, 8, 12],
        ),
    ];
    for (name, family, sizes) in studies {
        let study = run_truncation_study(&family, &sizes)?;
        println!("{name}:");
        print!("{}", study.to_csv());
        println!(
            "  upper bound strictly increasing: {}; apparently divergent: {}",
            study.diagnostics.upper_strictly_increasing,
            study.diagnostics.apparently_divergent_upper
        );
        if let Some(reason) = &study.aborted {
            println!("  aborted: {reason}");
        }
        println!();
    }

    // The full JSON report carries deltas, flags, and the heuristic note.
    let study = run_truncation_study(&StudyFamily::DftRows { ratio: 0.5 }, &[8, 16])?;
    println!("JSON report for the Fourier study:");
    println!(
        "{}",
        serde_json::to_string_pretty(&study).expect("study serializes")
    );
    Ok(())
}
