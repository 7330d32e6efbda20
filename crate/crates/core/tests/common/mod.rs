#![allow(dead_code)]

use std::collections::HashSet;

use boxmerge::{AxisSpec, PointSet};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn axes(lengths: &[u32]) -> Vec<AxisSpec> {
    lengths.iter().map(|&l| AxisSpec::new(l).unwrap()).collect()
}

/// Random point set with `dim` axes of length in `len_range` and up to
/// `max_points` points.
pub fn random_point_set(
    rng: &mut ChaCha8Rng,
    dim: usize,
    len_range: std::ops::RangeInclusive<u32>,
    max_points: usize,
) -> PointSet {
    let lengths: Vec<u32> = (0..dim)
        .map(|_| rng.random_range(len_range.clone()))
        .collect();
    let count = rng.random_range(1..=max_points);
    let points: Vec<Vec<u32>> = (0..count)
        .map(|_| lengths.iter().map(|&l| rng.random_range(0..l)).collect())
        .collect();
    PointSet::new(axes(&lengths), points).unwrap()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Raw points as generated, before deduplication, with their axis lengths.
#[derive(Clone, Debug)]
pub struct RawSet {
    pub lengths: Vec<u32>,
    pub points: Vec<Vec<u32>>,
}

impl RawSet {
    pub fn build(&self) -> PointSet {
        PointSet::new(axes(&self.lengths), &self.points).unwrap()
    }
}

pub fn raw_set(max_len: u32, max_points: usize) -> impl Strategy<Value = RawSet> {
    prop::sample::select(vec![1usize, 2, 3, 5])
        .prop_flat_map(move |dim| prop::collection::vec(2..=max_len, dim))
        .prop_flat_map(move |lengths| {
            let coord = lengths.iter().map(|&l| 0..l).collect::<Vec<_>>();
            let points = prop::collection::vec(coord, 1..=max_points);
            (Just(lengths), points)
        })
        .prop_map(|(lengths, points)| RawSet { lengths, points })
}

/// Box rows of `points` at scale `s`, computed without the library.
pub fn brute_boxes(lengths: &[u32], points: &[Vec<u32>], s: u32) -> HashSet<Vec<u32>> {
    points
        .iter()
        .map(|p| {
            p.iter()
                .zip(lengths)
                .map(|(&x, &l)| ((u64::from(x) * u64::from(s)) / u64::from(l)) as u32)
                .collect()
        })
        .collect()
}
