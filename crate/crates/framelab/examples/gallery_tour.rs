//! One-stop tour of every named frame constructor.
//!
//! Run with `cargo run --example gallery_tour`.

use framelab::error::Result;
use framelab::frame::Frame;
use framelab::gallery;
use framelab::io::frame_to_string;
use framelab::operators::classify;
use framelab::redundancy::redundancy_bounds;

fn line(name: &str, frame: &Frame) -> Result<()> {
    let c = classify(frame)?;
    let mut tags = Vec::new();
    for (label, on) in [
        ("spanning", c.spanning),
        ("tight", c.tight),
        ("parseval", c.parseval),
        ("equal-norm", c.equal_norm),
        ("unit-norm", c.unit_norm),
        ("orthogonal", c.orthogonal),
    ] {
        if on {
            tags.push(label);
        }
    }
    let b = redundancy_bounds(frame);
    let bounds = match b {
        Ok(r) => format!("R- = {:.3}, R+ = {:.3}", r.lower, r.upper),
        Err(e) => format!("redundancy unavailable: {e}"),
    };
    println!(
        "{name:<24} {:>2} vectors, dim {:>2}  {bounds}  [{}]",
        frame.len(),
        frame.dim(),
        tags.join(", ")
    );
    Ok(())
}

fn main() -> Result<()> {
    line("phi1(4)", &gallery::phi1(4)?)?;
    line("phi2(4)", &gallery::phi2(4)?)?;
    line("phi3(4)", &gallery::phi3(4)?)?;
    line("phi4(6, 0.3, 10)", &gallery::phi4(6, 0.3, 10)?)?;
    line(
        "dft(8, rows 0..4)",
        &gallery::dft_subset_parseval(8, &[0, 1, 2, 3])?,
    )?;
    line("onbs(4, 3, seed 1)", &gallery::union_of_onbs(4, 3, 1)?)?;
    line("notes(4)", &gallery::notes_counterexample(4)?)?;
    line("notes +/- family(4)", &gallery::notes_plus_minus_family(4)?)?;
    line("random(3, 6, seed 5)", &gallery::random_frame(3, 6, 5)?)?;

    // Every frame serializes to the JSON document format and loads back
    // bit-for-bit.
    let frame = gallery::dft_subset_parseval(4, &[0, 1])?;
    let text = frame_to_string(&frame);
    let reloaded = framelab::io::frame_from_str(&text)?;
    assert_eq!(frame, reloaded);
    println!("\ndft(4, rows 0..2) as a frame document:\n{text}");
    Ok(())
}
