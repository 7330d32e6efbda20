use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of non-empty boxes `n` at partition count `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScaleCount {
    pub s: u32,
    pub n: u64,
}

impl ScaleCount {
    pub fn log2_s(&self) -> f64 {
        f64::from(self.s).log2()
    }

    pub fn log2_n(&self) -> f64 {
        (self.n as f64).log2()
    }
}

/// Box counts per scale, finest scale first, together with the number of
/// points in the measured set and, for rasters, the frame size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScaleSeries {
    entries: Vec<ScaleCount>,
    source_point_count: u64,
    frame_size: Option<u64>,
}

impl ScaleSeries {
    /// Checks that `s` halves from one entry to the next, that every count is
    /// in `1..=source_point_count` and that the set is non-empty.
    pub fn new(entries: Vec<ScaleCount>, source_point_count: u64) -> Result<Self> {
        if source_point_count == 0 {
            return Err(Error::EmptyPointSet);
        }
        for (i, e) in entries.iter().enumerate() {
            if e.s == 0 || e.n == 0 || e.n > source_point_count {
                return Err(Error::InvalidSeries(format!(
                    "entry {i}: s={} n={} with {source_point_count} points",
                    e.s, e.n
                )));
            }
        }
        if let Some(w) = entries.windows(2).find(|w| w[0].s != 2 * w[1].s) {
            return Err(Error::InvalidSeries(format!(
                "s={} is not followed by s={}",
                w[0].s,
                w[0].s / 2
            )));
        }
        Ok(Self {
            entries,
            source_point_count,
            frame_size: None,
        })
    }

    pub(crate) fn from_parts(
        entries: Vec<ScaleCount>,
        source_point_count: u64,
        frame_size: Option<u64>,
    ) -> Self {
        debug_assert!(Self::new(entries.clone(), source_point_count).is_ok());
        Self {
            entries,
            source_point_count,
            frame_size,
        }
    }

    /// Records the frame the points were sampled from. It cannot be smaller
    /// than the point count.
    pub fn with_frame_size(mut self, frame_size: u64) -> Result<Self> {
        if frame_size < self.source_point_count {
            return Err(Error::InvalidSeries(format!(
                "frame of {frame_size} sites cannot hold {} points",
                self.source_point_count
            )));
        }
        self.frame_size = Some(frame_size);
        Ok(self)
    }

    pub fn frame_size(&self) -> Option<u64> {
        self.frame_size
    }

    pub fn entries(&self) -> &[ScaleCount] {
        &self.entries
    }

    pub fn source_point_count(&self) -> u64 {
        self.source_point_count
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Count at partition count `s`, if `s` is on the ladder.
    pub fn count_at(&self, s: u32) -> Option<u64> {
        self.entries.iter().find(|e| e.s == s).map(|e| e.n)
    }
}
