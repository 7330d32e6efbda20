//! Serialisable run reports: CSV of the log-log table and a JSON summary.
//!
//! CSV layout, one row per scale, finest first:
//!
//! ```text
//! s,n,log2_s,log2_n,kept
//! 256,65536,8.000000,16.000000,0
//! 128,16384,7.000000,14.000000,1
//! ```

use std::io;

use serde::{Deserialize, Serialize};

use crate::estimate::{CutoffReference, DimensionEstimate, LogLogPoint};

pub const CSV_HEADER: [&str; 5] = ["s", "n", "log2_s", "log2_n", "kept"];

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScaleRecord {
    pub s: u32,
    pub n: u64,
    pub log2_s: f64,
    pub log2_n: f64,
    pub kept: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub input: String,
    pub axes: Vec<u32>,
    pub point_count: u64,
    pub frame_size: Option<u64>,
    pub cutoff_fraction: f64,
    pub cutoff_reference: CutoffReference,
    pub threshold: f64,
    pub scales: Vec<ScaleRecord>,
    pub kept: Vec<LogLogPoint>,
    pub rejected: Vec<LogLogPoint>,
    pub dimension: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn new(
        input: impl Into<String>,
        axes: Vec<u32>,
        estimate: &DimensionEstimate,
        wall_time_ms: f64,
    ) -> Self {
        let scales = estimate
            .series
            .entries()
            .iter()
            .map(|e| ScaleRecord {
                s: e.s,
                n: e.n,
                log2_s: e.log2_s(),
                log2_n: e.log2_n(),
                kept: estimate.kept.iter().any(|k| k.s == e.s),
            })
            .collect();
        Self {
            input: input.into(),
            axes,
            point_count: estimate.series.source_point_count(),
            frame_size: estimate.series.frame_size(),
            cutoff_fraction: estimate.config.cutoff_fraction(),
            cutoff_reference: estimate.config.reference(),
            threshold: estimate.threshold,
            scales,
            kept: estimate.kept.clone(),
            rejected: estimate.rejected.clone(),
            dimension: estimate.dimension,
            intercept: estimate.intercept,
            r_squared: estimate.r_squared,
            wall_time_ms,
        }
    }

    pub fn write_csv<W: io::Write>(&self, out: W) -> csv::Result<()> {
        write_csv(&self.scales, out)
    }

    pub fn csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV output is ASCII")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }
}

fn csv_writer<W: io::Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

pub fn write_csv<W: io::Write>(records: &[ScaleRecord], out: W) -> csv::Result<()> {
    let mut w = csv_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.s.to_string(),
            r.n.to_string(),
            format!("{:.6}", r.log2_s),
            format!("{:.6}", r.log2_n),
            u8::from(r.kept).to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Deserialize)]
struct CsvRow {
    s: u32,
    n: u64,
    log2_s: f64,
    log2_n: f64,
    kept: u8,
}

/// Parses a CSV table written by [`write_csv`].
pub fn read_csv<R: io::Read>(input: R) -> csv::Result<Vec<ScaleRecord>> {
    let mut rdr = csv::ReaderBuilder::new().from_reader(input);
    let headers = rdr.headers()?.clone();
    if headers.iter().ne(CSV_HEADER) {
        return Err(csv::Error::from(io::Error::new(
            io::ErrorKind::InvalidData,
            format!("unexpected CSV header {headers:?}"),
        )));
    }
    rdr.deserialize::<CsvRow>()
        .map(|row| {
            let row = row?;
            let kept = match row.kept {
                0 => false,
                1 => true,
                v => {
                    return Err(csv::Error::from(io::Error::new(
                        io::ErrorKind::InvalidData,
                        format!("kept must be 0 or 1, got {v}"),
                    )))
                }
            };
            Ok(ScaleRecord {
                s: row.s,
                n: row.n,
                log2_s: row.log2_s,
                log2_n: row.log2_n,
                kept,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::estimate::{estimate_from_series, FitConfig};
    use crate::series::{ScaleCount, ScaleSeries};

    fn plane_report() -> RunReport {
        let entries = (1..=8)
            .rev()
            .map(|k| ScaleCount {
                s: 1 << k,
                n: 1 << (2 * k),
            })
            .collect();
        let series = ScaleSeries::new(entries, 65536).unwrap();
        let est = estimate_from_series(series, 5, &FitConfig::default()).unwrap();
        RunReport::new("plane", vec![256; 5], &est, 1.5)
    }

    #[test]
    fn csv_layout_is_fixed() {
        let csv = plane_report().csv_string();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "s,n,log2_s,log2_n,kept");
        assert_eq!(lines[1], "256,65536,8.000000,16.000000,0");
        assert_eq!(lines[2], "128,16384,7.000000,14.000000,1");
        assert_eq!(lines[8], "2,4,1.000000,2.000000,1");
        assert_eq!(lines.len(), 9);
        assert!(csv.ends_with('\n') && !csv.contains('\r'));
    }

    #[test]
    fn csv_reparses_to_identical_text() {
        let report = plane_report();
        let csv = report.csv_string();
        let records = read_csv(csv.as_bytes()).unwrap();
        assert_eq!(records.len(), report.scales.len());
        for (a, b) in records.iter().zip(&report.scales) {
            assert_eq!((a.s, a.n, a.kept), (b.s, b.n, b.kept));
        }
        let mut again = Vec::new();
        write_csv(&records, &mut again).unwrap();
        assert_eq!(String::from_utf8(again).unwrap(), csv);
    }

    #[test]
    fn csv_rejects_foreign_tables() {
        assert!(read_csv("a,b\n1,2\n".as_bytes()).is_err());
        assert!(read_csv("s,n,log2_s,log2_n,kept\n2,4,1.0,2.0,7\n".as_bytes()).is_err());
    }

    #[test]
    fn json_lists_kept_and_rejected() {
        let json: serde_json::Value = serde_json::from_str(&plane_report().to_json()).unwrap();
        assert_eq!(json["rejected"].as_array().unwrap().len(), 1);
        assert_eq!(json["kept"].as_array().unwrap().len(), 7);
        assert_eq!(json["rejected"][0]["s"], 256);
        assert_eq!(json["dimension"], 2.0);
        assert_eq!(json["scales"][0]["kept"], false);
    }
}
