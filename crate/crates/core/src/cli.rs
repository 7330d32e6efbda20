//! Command-line front end: `measure`, `synth`, `verify` and `bench`.
//!
//! Exit codes: 0 success, 1 verification mismatch or usage error, 2 I/O or
//! decode failure, 3 estimation failure.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::estimate::{estimate_dimension, CutoffReference, DimensionEstimate, FitConfig};
use crate::imaging::{
    decode_image_file, image_to_pointset, noise_image, write_png, AlphaPolicy, Fixture,
    FixtureKind, RasterImage,
};
use crate::oracle::{first_divergence, naive_series};
use crate::partition::box_merge_series;
use crate::pointset::PointSet;
use crate::report::RunReport;
use crate::series::{ScaleCount, ScaleSeries};

/// Largest input `verify` accepts, in pixels.
pub const VERIFY_MAX_PIXELS: u64 = 1 << 20;

/// Worst-case throughput reported for an interpreted implementation.
pub const REFERENCE_MS_PER_MEGAPIXEL: f64 = 5000.0;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_ESTIMATE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "boxmerge",
    version,
    about = "Box-merging fractal dimension of colour images"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Estimate the fractal dimension of a PNG or PPM image.
    Measure(MeasureArgs),
    /// Write a synthetic test image as PNG.
    Synth(SynthArgs),
    /// Compare the merge pass against brute-force counting.
    Verify(VerifyArgs),
    /// Time measurements of noise images of increasing size.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Args)]
pub struct MeasureArgs {
    pub image: PathBuf,
    /// Pixels with alpha at or below this value are ignored.
    #[arg(long, default_value_t = 0)]
    pub alpha_threshold: u8,
    /// Scales with log2 n above this fraction of the log2 reference size are excluded from the fit.
    #[arg(long, default_value_t = FitConfig::DEFAULT_CUTOFF)]
    pub cutoff_fraction: f64,
    /// Size the cut-off is taken against: the image frame or the visible points.
    #[arg(long, default_value_t = CutoffReference::Frame)]
    pub cutoff_reference: CutoffReference,
    /// Write the per-scale table as CSV.
    #[arg(long)]
    pub csv_out: Option<PathBuf>,
    /// Write the full report as JSON.
    #[arg(long)]
    pub json_out: Option<PathBuf>,
}

impl MeasureArgs {
    pub fn new(image: impl Into<PathBuf>) -> Self {
        Self {
            image: image.into(),
            alpha_threshold: 0,
            cutoff_fraction: FitConfig::DEFAULT_CUTOFF,
            cutoff_reference: CutoffReference::Frame,
            csv_out: None,
            json_out: None,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SynthArgs {
    /// line, plane, noise1, noise2 or noise3
    pub kind: FixtureKind,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Image path or fixture name.
    pub target: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0)]
    pub alpha_threshold: u8,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Square image sides to time.
    #[arg(long, value_delimiter = ',', default_value = "256,512,1024")]
    pub sizes: Vec<u32>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Timed runs per size; the fastest is reported.
    #[arg(long, default_value_t = 3)]
    pub repeats: u32,
}

/// A failed command: the stage that failed, the message and the exit code.
#[derive(Debug)]
pub struct CliError {
    pub stage: &'static str,
    pub exit_code: i32,
    pub source: Error,
}

impl CliError {
    fn new(stage: &'static str, exit_code: i32, source: Error) -> Self {
        Self {
            stage,
            exit_code,
            source,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} failed: {}", self.stage, self.source)
    }
}

impl std::error::Error for CliError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        Some(&self.source)
    }
}

fn io_error(path: &Path, source: std::io::Error) -> Error {
    Error::Io {
        path: path.to_owned(),
        source,
    }
}

fn embed(img: &RasterImage, alpha_threshold: u8) -> Result<PointSet, CliError> {
    image_to_pointset(img, AlphaPolicy::new(alpha_threshold))
        .map_err(|e| CliError::new("embed", EXIT_ESTIMATE, e))
}

fn axis_lengths(ps: &PointSet) -> Vec<u32> {
    ps.axes().iter().map(|a| a.length()).collect()
}

pub fn cmd_measure(args: &MeasureArgs) -> Result<RunReport, CliError> {
    let config = FitConfig::new(args.cutoff_fraction)
        .map_err(|e| CliError::new("arguments", EXIT_USAGE, e))?
        .with_reference(args.cutoff_reference);
    let img = decode_image_file(&args.image).map_err(|e| CliError::new("decode", EXIT_IO, e))?;

    let started = Instant::now();
    let ps = embed(&img, args.alpha_threshold)?;
    let estimate = estimate_dimension(&ps, &config)
        .map_err(|e| CliError::new("estimate", EXIT_ESTIMATE, e))?;
    let elapsed = started.elapsed().as_secs_f64() * 1e3;

    let report = RunReport::new(
        args.image.display().to_string(),
        axis_lengths(&ps),
        &estimate,
        elapsed,
    );
    if let Some(path) = &args.csv_out {
        std::fs::write(path, report.csv_string())
            .map_err(|e| CliError::new("write csv", EXIT_IO, io_error(path, e)))?;
    }
    if let Some(path) = &args.json_out {
        std::fs::write(path, report.to_json() + "\n")
            .map_err(|e| CliError::new("write json", EXIT_IO, io_error(path, e)))?;
    }
    Ok(report)
}

pub fn cmd_synth(args: &SynthArgs) -> Result<RasterImage, CliError> {
    let img = Fixture::new(args.kind, args.seed).render();
    write_png(&img, &args.out).map_err(|e| CliError::new("write png", EXIT_IO, e))?;
    Ok(img)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub input: String,
    pub merged: ScaleSeries,
    pub naive: ScaleSeries,
    pub divergence: Option<(usize, Option<ScaleCount>, Option<ScaleCount>)>,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        self.divergence.is_none()
    }
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<VerifyOutcome, CliError> {
    let (input, img) = match args.target.parse::<FixtureKind>() {
        Ok(kind) => {
            let fixture = Fixture::new(kind, args.seed);
            (format!("{kind} (seed {})", args.seed), fixture.render())
        }
        Err(_) => {
            let path = Path::new(&args.target);
            let img = decode_image_file(path).map_err(|e| CliError::new("decode", EXIT_IO, e))?;
            (path.display().to_string(), img)
        }
    };
    let pixels = u64::from(img.width()) * u64::from(img.height());
    if pixels > VERIFY_MAX_PIXELS {
        return Err(CliError::new(
            "verify",
            EXIT_USAGE,
            Error::InputTooLarge {
                pixels,
                limit: VERIFY_MAX_PIXELS,
            },
        ));
    }
    let ps = embed(&img, args.alpha_threshold)?;
    let merged = box_merge_series(&ps).map_err(|e| CliError::new("merge", EXIT_ESTIMATE, e))?;
    let naive = naive_series(&ps).map_err(|e| CliError::new("oracle", EXIT_ESTIMATE, e))?;
    let divergence = first_divergence(&merged, &naive);
    Ok(VerifyOutcome {
        input,
        merged,
        naive,
        divergence,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub size: u32,
    pub megapixels: f64,
    pub ms: f64,
    pub ms_per_megapixel: f64,
    pub dimension: f64,
}

/// Times embedding plus estimation of a full-colour noise image per size.
pub fn cmd_bench(args: &BenchArgs) -> Result<Vec<BenchRow>, CliError> {
    let config = FitConfig::default();
    args.sizes
        .iter()
        .map(|&size| {
            let img = noise_image(size, size, 3, args.seed)
                .map_err(|e| CliError::new("generate", EXIT_USAGE, e))?;
            let mut best = f64::INFINITY;
            let mut estimate: Option<DimensionEstimate> = None;
            for _ in 0..args.repeats.max(1) {
                let started = Instant::now();
                let ps = embed(&img, 0)?;
                let est = estimate_dimension(&ps, &config)
                    .map_err(|e| CliError::new("estimate", EXIT_ESTIMATE, e))?;
                best = best.min(started.elapsed().as_secs_f64() * 1e3);
                estimate = Some(est);
            }
            let megapixels = f64::from(size) * f64::from(size) / 1e6;
            Ok(BenchRow {
                size,
                megapixels,
                ms: best,
                ms_per_megapixel: best / megapixels,
                dimension: estimate.map_or(f64::NAN, |e| e.dimension),
            })
        })
        .collect()
}

/// Parses `args` and runs the command, writing human output to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code
        }
    }
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<i32, CliError> {
    // stdout failures are not worth a distinct exit code
    match command {
        Command::Measure(args) => {
            let r = cmd_measure(args)?;
            let _ = writeln!(out, "D = {:.4}", r.dimension);
            let _ = writeln!(
                out,
                "R2 = {:.4}, {} of {} scales kept, {} points, {:.1} ms",
                r.r_squared,
                r.kept.len(),
                r.scales.len(),
                r.point_count,
                r.wall_time_ms
            );
            Ok(EXIT_OK)
        }
        Command::Synth(args) => {
            let img = cmd_synth(args)?;
            let _ = writeln!(
                out,
                "wrote {} ({}x{}, {} opaque pixels)",
                args.out.display(),
                img.width(),
                img.height(),
                img.visible_count(AlphaPolicy::default())
            );
            Ok(EXIT_OK)
        }
        Command::Verify(args) => {
            let outcome = cmd_verify(args)?;
            match outcome.divergence {
                None => {
                    let _ = writeln!(
                        out,
                        "pass: {} ({} scales match the brute-force count)",
                        outcome.input,
                        outcome.merged.len()
                    );
                    Ok(EXIT_OK)
                }
                Some((i, merged, naive)) => {
                    let fmt = |c: Option<ScaleCount>| {
                        c.map_or("missing".to_string(), |c| format!("s={} n={}", c.s, c.n))
                    };
                    let _ = writeln!(
                        out,
                        "FAIL: {} diverges at entry {i}: merge {} vs brute force {}",
                        outcome.input,
                        fmt(merged),
                        fmt(naive)
                    );
                    Ok(EXIT_MISMATCH)
                }
            }
        }
        Command::Bench(args) => {
            let rows = cmd_bench(args)?;
            let _ = writeln!(
                out,
                "{:>6} {:>8} {:>10} {:>10} {:>7}",
                "size", "MP", "ms", "ms/MP", "D"
            );
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{:>6} {:>8.3} {:>10.2} {:>10.2} {:>7.4}",
                    r.size, r.megapixels, r.ms, r.ms_per_megapixel, r.dimension
                );
            }
            let _ = writeln!(
                out,
                "reference: about {REFERENCE_MS_PER_MEGAPIXEL:.0} ms/MP worst case for an interpreted implementation"
            );
            Ok(EXIT_OK)
        }
    }
}
