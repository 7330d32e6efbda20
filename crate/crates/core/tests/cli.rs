use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use boxmerge::cli::{run, EXIT_ESTIMATE, EXIT_IO, EXIT_OK, EXIT_USAGE};
use boxmerge::imaging::write_png;
use boxmerge::report::read_csv;
use boxmerge::{decode_image_file, AlphaPolicy, RasterImage};
use tempfile::TempDir;

fn run_capture(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("boxmerge").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn synth(dir: &Path, kind: &str, seed: u64) -> PathBuf {
    let path = dir.join(format!("{kind}-{seed}.png"));
    let (code, out, err) = run_capture(&[
        "synth",
        kind,
        "--seed",
        &seed.to_string(),
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK, "{out}{err}");
    path
}

#[test]
fn measure_synthesised_plane_and_line() {
    let dir = TempDir::new().unwrap();
    for (kind, expected) in [("plane", "D = 2.0000"), ("line", "D = 1.0000")] {
        let path = synth(dir.path(), kind, 0);
        let (code, out, err) = run_capture(&["measure", path.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK, "{err}");
        assert_eq!(out.lines().next(), Some(expected), "{out}");
    }
}

#[test]
fn measure_writes_csv_and_json() {
    let dir = TempDir::new().unwrap();
    let img = synth(dir.path(), "noise1", 4);
    let csv = dir.path().join("out.csv");
    let json = dir.path().join("out.json");
    let (code, _, err) = run_capture(&[
        "measure",
        img.to_str().unwrap(),
        "--csv-out",
        csv.to_str().unwrap(),
        "--json-out",
        json.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK, "{err}");

    let records = read_csv(fs::File::open(&csv).unwrap()).unwrap();
    assert_eq!(records.len(), 8);
    assert_eq!(records[0].s, 256);
    let report: serde_json::Value = serde_json::from_slice(&fs::read(&json).unwrap()).unwrap();
    assert_eq!(report["scales"].as_array().unwrap().len(), 8);
    assert_eq!(report["point_count"], 65536);
    assert_eq!(report["cutoff_reference"], "frame");
    let d = report["dimension"].as_f64().unwrap();
    assert!((d - 3.0).abs() < 0.1, "{d}");
}

#[test]
fn measure_points_reference_changes_threshold() {
    let dir = TempDir::new().unwrap();
    let line = synth(dir.path(), "line", 0);
    let json = dir.path().join("line.json");
    let (code, _, _) = run_capture(&[
        "measure",
        line.to_str().unwrap(),
        "--cutoff-reference",
        "points",
        "--json-out",
        json.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let report: serde_json::Value = serde_json::from_slice(&fs::read(&json).unwrap()).unwrap();
    // 0.9 * log2(256): the finest line scale has log2 n = 8 and is dropped
    assert!((report["threshold"].as_f64().unwrap() - 7.2).abs() < 1e-12);
    assert_eq!(report["rejected"][0]["s"], 256);
}

#[test]
fn all_transparent_image_exits_with_estimate_error() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("clear.png");
    write_png(&RasterImage::from_fn(16, 16, |_, _| [10, 20, 30, 0]), &path).unwrap();
    let (code, out, err) = run_capture(&["measure", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_ESTIMATE);
    assert!(out.is_empty());
    assert!(err.contains("transparent"), "{err}");
}

#[test]
fn alpha_threshold_can_hide_everything() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("faint.png");
    write_png(
        &RasterImage::from_fn(8, 8, |x, y| [x as u8, y as u8, 0, 40]),
        &path,
    )
    .unwrap();
    let (code, _, _) = run_capture(&["measure", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let (code, _, _) = run_capture(&["measure", path.to_str().unwrap(), "--alpha-threshold", "40"]);
    assert_eq!(code, EXIT_ESTIMATE);
}

#[test]
fn missing_input_exits_with_io_error() {
    let (code, _, err) = run_capture(&["measure", "/no/such/file.png"]);
    assert_eq!(code, EXIT_IO);
    assert!(!err.is_empty());
}

#[test]
fn unwritable_synth_target_exits_with_io_error() {
    let (code, _, _) = run_capture(&["synth", "plane", "-o", "/no/such/dir/plane.png"]);
    assert_eq!(code, EXIT_IO);
}

#[test]
fn synth_is_byte_reproducible() {
    let a = TempDir::new().unwrap();
    let b = TempDir::new().unwrap();
    let first = fs::read(synth(a.path(), "noise3", 7)).unwrap();
    let second = fs::read(synth(b.path(), "noise3", 7)).unwrap();
    assert_eq!(first, second);
    let other = fs::read(synth(b.path(), "noise3", 8)).unwrap();
    assert_ne!(first, other);
}

#[test]
fn synth_line_has_one_opaque_pixel_per_row() {
    let dir = TempDir::new().unwrap();
    let img = decode_image_file(synth(dir.path(), "line", 0)).unwrap();
    let opaque = img.visible_count(AlphaPolicy::default());
    assert_eq!(opaque, 256);
    assert_eq!(img.pixel_count() - opaque, 65280);
    assert!(img
        .pixels()
        .iter()
        .filter(|p| p[3] == 0)
        .all(|p| *p == [0, 0, 0, 0]));
}

#[test]
fn verify_fixtures_pass() {
    for target in ["plane", "noise3"] {
        let (code, out, err) = run_capture(&["verify", target, "--seed", "1"]);
        assert_eq!(code, EXIT_OK, "{err}");
        assert!(out.starts_with("pass:"), "{out}");
    }
}

#[test]
fn verify_accepts_image_paths() {
    let dir = TempDir::new().unwrap();
    let path = synth(dir.path(), "noise2", 5);
    let (code, out, _) = run_capture(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("8 scales match"), "{out}");
}

#[test]
fn verify_refuses_large_images() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("big.png");
    // 2 megapixels
    write_png(
        &RasterImage::from_fn(2048, 1024, |x, y| [x as u8, y as u8, 0, 255]),
        &path,
    )
    .unwrap();
    let (code, out, err) = run_capture(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("2097152"), "{err}");
}

#[test]
fn bench_reports_each_size() {
    let (code, out, _) = run_capture(&["bench", "--sizes", "64,128", "--repeats", "1"]);
    assert_eq!(code, EXIT_OK);
    let rows: Vec<&str> = out
        .lines()
        .filter(|l| l.trim_start().starts_with(char::is_numeric))
        .collect();
    assert_eq!(rows.len(), 2, "{out}");
    assert!(out.contains("ms/MP"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_boxmerge");
    let status = Command::new(bin)
        .args(["measure", "/no/such.png"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(EXIT_IO));
    let status = Command::new(bin).arg("bogus").output().unwrap().status;
    assert_eq!(status.code(), Some(EXIT_USAGE));

    let dir = TempDir::new().unwrap();
    let path = dir.path().join("plane.png");
    let status = Command::new(bin)
        .args(["synth", "plane", "-o", path.to_str().unwrap()])
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(bin)
        .args(["measure", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("D = 2.0000\n"));
}
