//! The dyadic ladder of partition counts.

use crate::error::{Error, Result};
use crate::pointset::AxisSpec;

/// Partition counts visited by the box-merging pass, finest first.
///
/// The finest count is the largest power of two not exceeding the shortest
/// axis, so every coarsening step halves `s` exactly. The ladder ends at
/// `s = 2`; `s = 1` always yields a single box and is not part of the plan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalePlan {
    nu_max: u32,
    scales: Vec<u32>,
}

impl ScalePlan {
    /// Number of halvings available: `floor(log2(min axis length))`.
    pub fn nu_max(&self) -> u32 {
        self.nu_max
    }

    /// `2^nu_max`.
    pub fn s_max(&self) -> u32 {
        1 << self.nu_max
    }

    pub fn scales(&self) -> &[u32] {
        &self.scales
    }

    /// Box edge `L / s` along an axis of the given length.
    pub fn box_edge(axis: AxisSpec, s: u32) -> f64 {
        f64::from(axis.length()) / f64::from(s)
    }
}

pub fn make_scale_plan(axes: &[AxisSpec]) -> Result<ScalePlan> {
    let min_length = axes.iter().map(|a| a.length()).min().ok_or(Error::NoAxes)?;
    if min_length < 2 {
        return Err(Error::MinAxisTooSmall { min_length });
    }
    let nu_max = min_length.ilog2();
    let scales = (1..=nu_max).rev().map(|nu| 1u32 << nu).collect();
    Ok(ScalePlan { nu_max, scales })
}
