//! Command-line front end: construct or load frames, run the analyses,
//! and emit JSON (or CSV) reports.
//!
//! Every report is wrapped in an envelope carrying the tool version, the
//! parameters and tolerances in force, and the seed, so results can be
//! reproduced from the report alone. The `--no-timestamp` flag makes
//! identical command lines produce byte-identical output.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};

use framelab::error::FrameError;
use framelab::frame::Frame;
use framelab::gallery;
use framelab::io;
use framelab::matroid::{self, LinearMatroid};
use framelab::operators::{classify, frame_bounds_in_mode, RangeMode};
use framelab::redundancy::{
    alt_redundancy_bounds_in_mode, desiderata_audit, redundancy_bounds_in_mode,
};
use framelab::tol;
use framelab::truncation::{run_truncation_study, StudyFamily};

/// Quantitative redundancy for finite frames: bounds, desiderata audits,
/// and exact partition/packing certificates.
#[derive(Parser)]
#[command(name = "framelab", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Classify a frame and report its optimal frame bounds.
    Analyze(AnalyzeArgs),
    /// Lower and upper redundancy with witness vectors and basis samples.
    Redundancy(RedundancyArgs),
    /// Partition the zero-stripped frame into a minimum number of
    /// linearly independent sets.
    Partition(CombinatoricsArgs),
    /// Pack a maximum number of pairwise disjoint spanning sets.
    Spanning(CombinatoricsArgs),
    /// Audit the redundancy desiderata D0-D7 with JSON certificates.
    Desiderata(DesiderataArgs),
    /// Check the projection/independence duality on a seeded projection.
    Duality(DualityArgs),
    /// Construct a named frame; with --emit, print the raw frame document.
    Gallery(GalleryArgs),
    /// Redundancy trends along increasing truncations of a family.
    Truncate(TruncateArgs),
}

#[derive(Args)]
struct SourceArgs {
    /// Gallery constructor: phi1, phi2, phi3, phi4, dft, onbs, notes, random.
    #[arg(long, value_name = "NAME")]
    gallery: Option<String>,
    /// Path to a frame document (JSON).
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Dimension for phi1/phi2/phi3.
    #[arg(long)]
    n: Option<usize>,
    /// Head size for phi4, size for notes, vector count for random.
    #[arg(long = "N", value_name = "N")]
    n_upper: Option<usize>,
    /// Perturbation in (0, 1) for phi4.
    #[arg(long)]
    eps: Option<f64>,
    /// Ambient dimension for phi4.
    #[arg(long = "M", value_name = "M")]
    m_upper: Option<usize>,
    /// Fourier matrix size for dft.
    #[arg(long)]
    m: Option<usize>,
    /// Comma-separated Fourier row indices for dft.
    #[arg(long, value_delimiter = ',', value_name = "I,J,...")]
    rows: Option<Vec<usize>>,
    /// Dimension for onbs/random.
    #[arg(long)]
    d: Option<usize>,
    /// Number of orthonormal bases for onbs.
    #[arg(long)]
    k: Option<usize>,
    /// Seed for seeded constructors (default 0).
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the report to this path instead of standard output.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Omit the timestamp so identical commands give identical bytes.
    #[arg(long)]
    no_timestamp: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    out: OutputArgs,
    /// Compute bounds on the span of the frame instead of the ambient space.
    #[arg(long)]
    range_restricted: bool,
    /// Override the relative tolerance behind the tight/uniform flags.
    #[arg(long, value_name = "X")]
    tol_tight: Option<f64>,
}

#[derive(Args)]
struct RedundancyArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    out: OutputArgs,
    /// Compute bounds on the span of the frame instead of the ambient space.
    #[arg(long)]
    range_restricted: bool,
    /// Override the relative tolerance behind the uniform flag.
    #[arg(long, value_name = "X")]
    tol_tight: Option<f64>,
    /// Alternative redundancy: bounds of the normalized canonical Parseval
    /// frame instead of the normalized frame itself.
    #[arg(long)]
    alt: bool,
}

#[derive(Args)]
struct CombinatoricsArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    out: OutputArgs,
    /// Fixed absolute rank tolerance instead of the scaled default rule.
    #[arg(long, value_name = "X")]
    tol_rank: Option<f64>,
}

#[derive(Args)]
struct DesiderataArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct DualityArgs {
    #[command(flatten)]
    out: OutputArgs,
    /// Dimension of the projection space.
    #[arg(long)]
    d: Option<usize>,
    /// Rank of the seeded projection.
    #[arg(long)]
    k: Option<usize>,
    /// Seed for the projection (default 0).
    #[arg(long)]
    seed: Option<u64>,
    /// Comma-separated basis-index subset J (default empty).
    #[arg(long, value_delimiter = ',', value_name = "I,J,...")]
    rows: Option<Vec<usize>>,
}

#[derive(Args)]
struct GalleryArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    out: OutputArgs,
    /// Print the raw frame document (loadable, bit-exact) with no envelope.
    #[arg(long)]
    emit: bool,
}

#[derive(Args)]
struct TruncateArgs {
    #[command(flatten)]
    out: OutputArgs,
    /// Family to truncate: phi4, dft, or notes.
    #[arg(long, value_name = "NAME")]
    gallery: Option<String>,
    /// Strictly increasing sizes, comma-separated.
    #[arg(long, value_delimiter = ',', value_name = "S1,S2,...")]
    sizes: Option<Vec<usize>>,
    /// Perturbation for the phi4 family (default 0.3).
    #[arg(long)]
    eps: Option<f64>,
    /// Ambient offset for the phi4 family: dimension = size + M (default 4).
    #[arg(long = "M", value_name = "OFFSET")]
    m_upper: Option<usize>,
    /// Kept-row fraction for the dft family (default 0.5).
    #[arg(long)]
    ratio: Option<f64>,
    /// Emit CSV (one row per size) instead of JSON.
    #[arg(long)]
    csv: bool,
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl From<FrameError> for CliError {
    fn from(e: FrameError) -> Self {
        match e {
            FrameError::InvalidParameter(_) | FrameError::IndexOutOfRange { .. } => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Domain(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.verb) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(verb: Verb) -> Result<(), CliError> {
    match verb {
        Verb::Analyze(a) => run_analyze(a),
        Verb::Redundancy(a) => run_redundancy(a),
        Verb::Partition(a) => run_combinatorics(a, true),
        Verb::Spanning(a) => run_combinatorics(a, false),
        Verb::Desiderata(a) => run_desiderata(a),
        Verb::Duality(a) => run_duality(a),
        Verb::Gallery(a) => run_gallery(a),
        Verb::Truncate(a) => run_truncate(a),
    }
}

fn require<T: Copy>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("{flag} is required here")))
}

fn to_value<T: Serialize>(v: &T) -> Result<Value, CliError> {
    serde_json::to_value(v).map_err(|e| CliError::Domain(format!("serialization failed: {e}")))
}

fn mode_of(range_restricted: bool) -> RangeMode {
    if range_restricted {
        RangeMode::Restricted
    } else {
        RangeMode::Ambient
    }
}

fn mode_name(mode: RangeMode) -> &'static str {
    match mode {
        RangeMode::Ambient => "ambient",
        RangeMode::Restricted => "range-restricted",
    }
}

/// Builds a frame from exactly one of `--gallery` and `--input`, echoing
/// the construction parameters for the report envelope.
fn load_frame(source: &SourceArgs) -> Result<(Frame, Map<String, Value>), CliError> {
    match (&source.gallery, &source.input) {
        (Some(_), Some(_)) => Err(CliError::Usage(
            "choose exactly one of --gallery and --input".into(),
        )),
        (None, None) => Err(CliError::Usage(
            "a frame source is required: --gallery NAME or --input PATH".into(),
        )),
        (Some(name), None) => build_gallery(name, source),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
            let frame = io::frame_from_str(&text)?;
            let mut params = Map::new();
            params.insert("input".into(), json!(path.display().to_string()));
            Ok((frame, params))
        }
    }
}

fn build_gallery(name: &str, s: &SourceArgs) -> Result<(Frame, Map<String, Value>), CliError> {
    let mut params = Map::new();
    params.insert("gallery".into(), json!(name));
    let frame = match name {
        "phi1" | "phi2" | "phi3" => {
            let n = require(s.n, "--n")?;
            params.insert("n".into(), json!(n));
            match name {
                "phi1" => gallery::phi1(n)?,
                "phi2" => gallery::phi2(n)?,
                _ => gallery::phi3(n)?,
            }
        }
        "phi4" => {
            let n = require(s.n_upper, "--N")?;
            let eps = require(s.eps, "--eps")?;
            let m = require(s.m_upper, "--M")?;
            params.insert("N".into(), json!(n));
            params.insert("eps".into(), json!(eps));
            params.insert("M".into(), json!(m));
            gallery::phi4(n, eps, m)?
        }
        "dft" => {
            let m = require(s.m, "--m")?;
            let rows = s
                .rows
                .as_deref()
                .ok_or_else(|| CliError::Usage("--rows is required here".into()))?;
            params.insert("m".into(), json!(m));
            params.insert("rows".into(), json!(rows));
            gallery::dft_subset_parseval(m, rows)?
        }
        "onbs" => {
            let d = require(s.d, "--d")?;
            let k = require(s.k, "--k")?;
            let seed = s.seed.unwrap_or(0);
            params.insert("d".into(), json!(d));
            params.insert("k".into(), json!(k));
            params.insert("seed".into(), json!(seed));
            gallery::union_of_onbs(d, k, seed)?
        }
        "notes" => {
            let n = require(s.n_upper, "--N")?;
            params.insert("N".into(), json!(n));
            gallery::notes_counterexample(n)?
        }
        "random" => {
            let d = require(s.d, "--d")?;
            let n = require(s.n_upper, "--N")?;
            let seed = s.seed.unwrap_or(0);
            params.insert("d".into(), json!(d));
            params.insert("N".into(), json!(n));
            params.insert("seed".into(), json!(seed));
            gallery::random_frame(d, n, seed)?
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown gallery constructor `{other}` (expected phi1, phi2, phi3, phi4, dft, onbs, notes, or random)"
            )))
        }
    };
    Ok((frame, params))
}

fn write_text(out: &OutputArgs, text: String) -> Result<(), CliError> {
    match &out.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit(
    out: &OutputArgs,
    command: &str,
    parameters: Map<String, Value>,
    seed: Option<u64>,
    tolerances: Value,
    report: Value,
) -> Result<(), CliError> {
    let mut envelope = Map::new();
    envelope.insert("tool".into(), json!("framelab"));
    envelope.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    envelope.insert("command".into(), json!(command));
    envelope.insert("parameters".into(), Value::Object(parameters));
    envelope.insert("tolerances".into(), tolerances);
    envelope.insert("seed".into(), seed.map_or(Value::Null, |s| json!(s)));
    if !out.no_timestamp {
        envelope.insert("timestamp".into(), json!(chrono::Utc::now().to_rfc3339()));
    }
    envelope.insert("report".into(), report);
    let text = serde_json::to_string_pretty(&Value::Object(envelope))
        .map_err(|e| CliError::Domain(format!("serialization failed: {e}")))?;
    write_text(out, text + "\n")
}

const RANK_RULE: &str = "max(d, N) * eps_machine * sigma_max";

fn run_analyze(a: AnalyzeArgs) -> Result<(), CliError> {
    let (frame, mut params) = load_frame(&a.source)?;
    let mode = mode_of(a.range_restricted);
    if a.range_restricted {
        params.insert("range_restricted".into(), json!(true));
    }
    let bounds = frame_bounds_in_mode(&frame, mode)?;
    let mut classification = to_value(&classify(&frame)?)?;
    let tol_tight = a.tol_tight.unwrap_or(tol::CLASSIFY_REL);
    if a.tol_tight.is_some() {
        params.insert("tol_tight".into(), json!(tol_tight));
        classification["tight"] = json!(bounds.upper - bounds.lower <= tol_tight * bounds.upper);
    }
    let threshold = frame.zero_threshold();
    let dropped: Vec<usize> = frame
        .norms()
        .iter()
        .enumerate()
        .filter(|&(_, &n)| n <= threshold)
        .map(|(i, _)| i)
        .collect();
    let report = json!({
        "frame": {
            "field": frame.field(),
            "dimension": frame.dim(),
            "count": frame.len(),
            "norms": frame.norms(),
        },
        "dropped": dropped,
        "mode": mode_name(mode),
        "bounds": bounds,
        "classification": classification,
    });
    let tolerances = json!({
        "zero_vector_rel": tol::ZERO_VECTOR_REL,
        "tight": tol_tight,
    });
    emit(&a.out, "analyze", params, None, tolerances, report)
}

fn run_redundancy(a: RedundancyArgs) -> Result<(), CliError> {
    let (frame, mut params) = load_frame(&a.source)?;
    let mode = mode_of(a.range_restricted);
    if a.range_restricted {
        params.insert("range_restricted".into(), json!(true));
    }
    if a.alt {
        params.insert("alt".into(), json!(true));
    }
    let report = if a.alt {
        alt_redundancy_bounds_in_mode(&frame, mode)?
    } else {
        redundancy_bounds_in_mode(&frame, mode)?
    };
    let mut value = report.to_value();
    let tol_uniform = a.tol_tight.unwrap_or(tol::UNIFORM_REL);
    if a.tol_tight.is_some() {
        params.insert("tol_tight".into(), json!(tol_uniform));
        value["uniform"] = json!(report.upper - report.lower <= tol_uniform * report.upper);
    }
    let tolerances = json!({
        "zero_vector_rel": tol::ZERO_VECTOR_REL,
        "uniform": tol_uniform,
    });
    emit(&a.out, "redundancy", params, None, tolerances, value)
}

fn run_combinatorics(a: CombinatoricsArgs, partition: bool) -> Result<(), CliError> {
    let (frame, mut params) = load_frame(&a.source)?;
    let strip = frame.strip_and_normalize()?;
    let matroid = match a.tol_rank {
        Some(t) => {
            params.insert("tol_rank".into(), json!(t));
            LinearMatroid::with_tolerance(&strip.frame, t)
        }
        None => LinearMatroid::new(&strip.frame),
    };
    let (command, body) = if partition {
        (
            "partition",
            json!({ "partition": matroid::min_independent_partition(&matroid)? }),
        )
    } else {
        (
            "spanning",
            json!({ "packing": matroid::max_disjoint_spanning_sets(&matroid)? }),
        )
    };
    let mut report = json!({
        "dropped": strip.dropped,
        "kept": strip.kept,
    });
    report
        .as_object_mut()
        .expect("report is an object")
        .extend(body.as_object().expect("body is an object").clone());
    let tolerances = json!({
        "zero_vector_rel": tol::ZERO_VECTOR_REL,
        "rank": a.tol_rank.map_or(json!(RANK_RULE), |t| json!(t)),
    });
    emit(&a.out, command, params, None, tolerances, report)
}

fn run_desiderata(a: DesiderataArgs) -> Result<(), CliError> {
    let (frame, mut params) = load_frame(&a.source)?;
    let seed = a.source.seed.unwrap_or(0);
    params.insert("seed".into(), json!(seed));
    let audit = desiderata_audit(&frame, seed)?;
    let tolerances = json!({
        "zero_vector_rel": tol::ZERO_VECTOR_REL,
        "uniform": tol::UNIFORM_REL,
        "invariance": tol::INVARIANCE_TOL,
        "alt_invariance": tol::ALT_INVARIANCE_TOL,
        "rounding_slack": tol::ROUNDING_SLACK,
        "rank": RANK_RULE,
    });
    emit(
        &a.out,
        "desiderata",
        params,
        Some(seed),
        tolerances,
        to_value(&audit)?,
    )
}

fn run_duality(a: DualityArgs) -> Result<(), CliError> {
    let d = require(a.d, "--d")?;
    let k = require(a.k, "--k")?;
    let seed = a.seed.unwrap_or(0);
    let subset = a.rows.clone().unwrap_or_default();
    let mut params = Map::new();
    params.insert("d".into(), json!(d));
    params.insert("k".into(), json!(k));
    params.insert("seed".into(), json!(seed));
    params.insert("rows".into(), json!(subset));
    let projection = gallery::random_projection(d, k, seed)?;
    let result = matroid::projection_duality_check(&projection, &subset)?;
    let consistent = result.consistent();
    let report = json!({
        "projection": { "dimension": d, "rank": k, "seed": seed },
        "result": result,
        "consistent": consistent,
    });
    let tolerances = json!({
        "projection": tol::PROJECTION_TOL,
        "rank": RANK_RULE,
    });
    emit(&a.out, "duality", params, Some(seed), tolerances, report)
}

fn run_gallery(a: GalleryArgs) -> Result<(), CliError> {
    if a.source.gallery.is_none() {
        return Err(CliError::Usage(
            "the gallery verb requires --gallery NAME".into(),
        ));
    }
    if a.source.input.is_some() {
        return Err(CliError::Usage("the gallery verb takes no --input".into()));
    }
    let (frame, params) = load_frame(&a.source)?;
    if a.emit {
        return write_text(&a.out, io::frame_to_string(&frame));
    }
    let seed = params.get("seed").and_then(Value::as_u64);
    let report = json!({
        "frame": io::frame_to_value(&frame),
        "count": frame.len(),
        "dimension": frame.dim(),
        "field": frame.field(),
        "norms": frame.norms(),
    });
    let tolerances = json!({ "zero_vector_rel": tol::ZERO_VECTOR_REL });
    emit(&a.out, "gallery", params, seed, tolerances, report)
}

fn run_truncate(a: TruncateArgs) -> Result<(), CliError> {
    let name = a
        .gallery
        .as_deref()
        .ok_or_else(|| CliError::Usage("the truncate verb requires --gallery NAME".into()))?;
    let sizes = a
        .sizes
        .clone()
        .ok_or_else(|| CliError::Usage("the truncate verb requires --sizes".into()))?;
    let mut params = Map::new();
    params.insert("gallery".into(), json!(name));
    params.insert("sizes".into(), json!(sizes));
    let family = match name {
        "phi4" => {
            let eps = a.eps.unwrap_or(0.3);
            let m_offset = a.m_upper.unwrap_or(4);
            params.insert("eps".into(), json!(eps));
            params.insert("M".into(), json!(m_offset));
            StudyFamily::Perturbed { eps, m_offset }
        }
        "dft" => {
            let ratio = a.ratio.unwrap_or(0.5);
            params.insert("ratio".into(), json!(ratio));
            StudyFamily::DftRows { ratio }
        }
        "notes" => StudyFamily::Notes,
        other => {
            return Err(CliError::Usage(format!(
                "unknown truncation family `{other}` (expected phi4, dft, or notes)"
            )))
        }
    };
    let study = run_truncation_study(&family, &sizes)?;
    if a.csv {
        return write_text(&a.out, study.to_csv());
    }
    let tolerances = json!({
        "zero_vector_rel": tol::ZERO_VECTOR_REL,
        "uniform": tol::UNIFORM_REL,
    });
    emit(
        &a.out,
        "truncate",
        params,
        None,
        tolerances,
        to_value(&study)?,
    )
}
