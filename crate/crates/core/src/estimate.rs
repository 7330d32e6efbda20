//! Saturation cut-off and log-log slope fitting.
//!
//! A finite image can never show more boxes than it has pixels, so at fine
//! scales the log-log curve flattens near `log2` of the image size. Scales
//! whose `log2 n` exceeds `cutoff_fraction * log2 size` are set aside before
//! fitting. The size is the frame (`width * height`) for sets taken from a
//! raster and the point count otherwise; see [`CutoffReference`].
//! All logarithms are base 2; the slope does not depend on the base.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::box_merge_series;
use crate::pointset::PointSet;
use crate::series::{ScaleCount, ScaleSeries};

/// Which size the saturation threshold is taken against.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CutoffReference {
    /// The frame the set was sampled from, falling back to the point count
    /// when the set has no frame.
    #[default]
    Frame,
    /// The number of points actually present.
    Points,
}

impl CutoffReference {
    pub fn size(self, series: &ScaleSeries) -> u64 {
        match self {
            CutoffReference::Frame => series.frame_size().unwrap_or(series.source_point_count()),
            CutoffReference::Points => series.source_point_count(),
        }
    }
}

impl fmt::Display for CutoffReference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CutoffReference::Frame => "frame",
            CutoffReference::Points => "points",
        })
    }
}

impl FromStr for CutoffReference {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "frame" => Ok(CutoffReference::Frame),
            "points" => Ok(CutoffReference::Points),
            other => Err(format!(
                "unknown cut-off reference '{other}' (expected frame or points)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitConfig {
    cutoff_fraction: f64,
    reference: CutoffReference,
}

impl FitConfig {
    pub const DEFAULT_CUTOFF: f64 = 0.9;

    pub fn new(cutoff_fraction: f64) -> Result<Self> {
        if !(cutoff_fraction > 0.0 && cutoff_fraction <= 1.0) {
            return Err(Error::InvalidCutoff(cutoff_fraction));
        }
        Ok(Self {
            cutoff_fraction,
            reference: CutoffReference::default(),
        })
    }

    pub fn with_reference(mut self, reference: CutoffReference) -> Self {
        self.reference = reference;
        self
    }

    pub fn cutoff_fraction(&self) -> f64 {
        self.cutoff_fraction
    }

    pub fn reference(&self) -> CutoffReference {
        self.reference
    }
}

impl Default for FitConfig {
    fn default() -> Self {
        Self {
            cutoff_fraction: Self::DEFAULT_CUTOFF,
            reference: CutoffReference::default(),
        }
    }
}

/// One scale on the log-log plot.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogLogPoint {
    pub s: u32,
    pub n: u64,
    pub log2_s: f64,
    pub log2_n: f64,
}

impl From<ScaleCount> for LogLogPoint {
    fn from(c: ScaleCount) -> Self {
        Self {
            s: c.s,
            n: c.n,
            log2_s: c.log2_s(),
            log2_n: c.log2_n(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CutoffSplit {
    pub threshold: f64,
    pub kept: Vec<LogLogPoint>,
    pub rejected: Vec<LogLogPoint>,
}

/// Splits the series at `cutoff_fraction * log2(size)`. A scale is rejected
/// only when its `log2 n` is strictly above the threshold.
pub fn apply_cutoff(series: &ScaleSeries, config: &FitConfig) -> CutoffSplit {
    let size = config.reference.size(series);
    let threshold = config.cutoff_fraction * (size as f64).log2();
    let mut split = CutoffSplit {
        threshold,
        ..CutoffSplit::default()
    };
    for &entry in series.entries() {
        let p = LogLogPoint::from(entry);
        if p.log2_n > threshold {
            split.rejected.push(p);
        } else {
            split.kept.push(p);
        }
    }
    split
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

/// Ordinary least squares `y = slope * x + intercept`.
///
/// When every `y` is equal the fit is a flat line with no residual and
/// `r_squared` is reported as 1.
pub fn fit_loglog(points: &[(f64, f64)]) -> Result<LineFit> {
    let insufficient = Error::InsufficientPoints { kept: points.len() };
    if points.len() < 2 {
        return Err(insufficient);
    }
    let count = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / count;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / count;

    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for &(x, y) in points {
        let (dx, dy) = (x - mean_x, y - mean_y);
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if sxx == 0.0 {
        return Err(insufficient);
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;

    let ss_res: f64 = points
        .iter()
        .map(|&(x, y)| {
            let r = y - (slope * x + intercept);
            r * r
        })
        .sum();
    let r_squared = if syy == 0.0 {
        1.0
    } else {
        (1.0 - ss_res / syy).clamp(0.0, 1.0)
    };
    Ok(LineFit {
        slope,
        intercept,
        r_squared,
    })
}

/// Fitted box dimension with the scales that went into it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DimensionEstimate {
    pub dimension: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub threshold: f64,
    pub kept: Vec<LogLogPoint>,
    pub rejected: Vec<LogLogPoint>,
    /// Number of axes of the measured space.
    pub embedding_dimension: usize,
    pub config: FitConfig,
    pub series: ScaleSeries,
}

/// Cut-off and fit applied to an already counted series.
pub fn estimate_from_series(
    series: ScaleSeries,
    embedding_dimension: usize,
    config: &FitConfig,
) -> Result<DimensionEstimate> {
    let split = apply_cutoff(&series, config);
    let xy: Vec<(f64, f64)> = split.kept.iter().map(|p| (p.log2_s, p.log2_n)).collect();
    let fit = fit_loglog(&xy)?;
    Ok(DimensionEstimate {
        dimension: fit.slope,
        intercept: fit.intercept,
        r_squared: fit.r_squared,
        threshold: split.threshold,
        kept: split.kept,
        rejected: split.rejected,
        embedding_dimension,
        config: *config,
        series,
    })
}

pub fn estimate_dimension(ps: &PointSet, config: &FitConfig) -> Result<DimensionEstimate> {
    let series = box_merge_series(ps)?;
    estimate_from_series(series, ps.dim(), config)
}
