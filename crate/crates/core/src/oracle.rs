//! Brute-force box counting used to check the merge pass.
//!
//! Every scale is counted from scratch: each point is mapped to its box and
//! inserted into a fresh hash set. Nothing is carried between scales and the
//! only shared piece with the merge path is [`box_coordinate`].

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::partition::{box_coordinate, check_scale};
use crate::pointset::PointSet;
use crate::scale::make_scale_plan;
use crate::series::{ScaleCount, ScaleSeries};

pub fn naive_box_count(ps: &PointSet, s: u32) -> Result<u64> {
    check_scale(ps, s)?;
    let lengths: Vec<u32> = ps.axes().iter().map(|a| a.length()).collect();
    let boxes: HashSet<Vec<u32>> = ps
        .iter()
        .map(|p| {
            p.iter()
                .zip(&lengths)
                .map(|(&x, &len)| box_coordinate(x, s, len))
                .collect()
        })
        .collect();
    Ok(boxes.len() as u64)
}

/// [`naive_box_count`] at every scale of the plan, finest first.
pub fn naive_series(ps: &PointSet) -> Result<ScaleSeries> {
    if ps.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let plan = make_scale_plan(ps.axes())?;
    let entries = plan
        .scales()
        .iter()
        .map(|&s| {
            Ok(ScaleCount {
                s,
                n: naive_box_count(ps, s)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScaleSeries::from_parts(
        entries,
        ps.len() as u64,
        ps.frame_size(),
    ))
}

/// First scale at which two series disagree, as `(index, left, right)`.
pub fn first_divergence(
    left: &ScaleSeries,
    right: &ScaleSeries,
) -> Option<(usize, Option<ScaleCount>, Option<ScaleCount>)> {
    let len = left.len().max(right.len());
    (0..len).find_map(|i| {
        let (a, b) = (
            left.entries().get(i).copied(),
            right.entries().get(i).copied(),
        );
        (a != b).then_some((i, a, b))
    })
}
