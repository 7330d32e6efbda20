//! Cross-checks the merge pass against brute-force counting on random
//! point sets of several dimensions.

use boxmerge::oracle::first_divergence;
use boxmerge::{box_merge_series, naive_series, AxisSpec, PointSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), boxmerge::Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut failures = 0;
    for case in 0..50 {
        let dim = [1, 2, 3, 5][case % 4];
        let lengths: Vec<u32> = (0..dim).map(|_| rng.random_range(4..=256)).collect();
        let count = rng.random_range(1..=5000);
        let points: Vec<Vec<u32>> = (0..count)
            .map(|_| lengths.iter().map(|&l| rng.random_range(0..l)).collect())
            .collect();
        let axes = lengths
            .iter()
            .map(|&l| AxisSpec::new(l))
            .collect::<Result<_, _>>()?;
        let ps = PointSet::new(axes, points)?;

        let merged = box_merge_series(&ps)?;
        let naive = naive_series(&ps)?;
        match first_divergence(&merged, &naive) {
            None => println!(
                "case {case:>2}: E={dim} axes={lengths:?} {} scales agree",
                merged.len()
            ),
            Some(d) => {
                failures += 1;
                println!("case {case:>2}: MISMATCH {d:?}");
            }
        }
    }
    println!("{failures} mismatches");
    Ok(())
}
