//! Measures every synthetic test image and compares with its nominal
//! dimension: a coloured line (1), a gradient plane (2) and the plane with
//! noise in one, two or three colour channels (3, 4, 5).

use boxmerge::{estimate_dimension, FitConfig, Fixture, FixtureKind};

fn main() -> Result<(), boxmerge::Error> {
    let config = FitConfig::default();
    println!(
        "{:<8} {:>7} {:>9} {:>6} {:>9}",
        "fixture", "points", "D", "R2", "nominal"
    );
    for kind in FixtureKind::ALL {
        let ps = Fixture::new(kind, 1).point_set();
        let est = estimate_dimension(&ps, &config)?;
        println!(
            "{:<8} {:>7} {:>9.4} {:>6.3} {:>9.1}   kept s = {:?}",
            kind.name(),
            ps.len(),
            est.dimension,
            est.r_squared,
            kind.nominal_dimension(),
            est.kept.iter().map(|k| k.s).collect::<Vec<_>>()
        );
    }
    Ok(())
}
