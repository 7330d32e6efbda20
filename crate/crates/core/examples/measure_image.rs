//! Measures a PNG or binary PPM image and prints the log-log table.
//!
//! ```text
//! cargo run --example measure_image -- photo.png [alpha-threshold]
//! ```
//!
//! Without arguments the gradient-plane test image is measured.

use boxmerge::{
    decode_image_file, estimate_dimension, image_to_pointset, AlphaPolicy, FitConfig, Fixture,
    FixtureKind,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = args.next();
    let threshold: u8 = args.next().map(|a| a.parse()).transpose()?.unwrap_or(0);

    let img = match &path {
        Some(p) => decode_image_file(p)?,
        None => Fixture::new(FixtureKind::Plane, 0).render(),
    };
    let policy = AlphaPolicy::new(threshold);
    println!(
        "{}: {}x{}, {} visible pixels",
        path.as_deref().unwrap_or("<gradient plane>"),
        img.width(),
        img.height(),
        img.visible_count(policy)
    );

    let ps = image_to_pointset(&img, policy)?;
    let est = estimate_dimension(&ps, &FitConfig::default())?;

    println!("cut-off: log2 n > {:.3} is rejected", est.threshold);
    println!("{:>5} {:>9} {:>8} {:>8}  fit", "s", "n", "log2 s", "log2 n");
    for e in est.series.entries() {
        let kept = est.kept.iter().any(|k| k.s == e.s);
        println!(
            "{:>5} {:>9} {:>8.3} {:>8.3}  {}",
            e.s,
            e.n,
            e.log2_s(),
            e.log2_n(),
            if kept { "kept" } else { "rejected" }
        );
    }
    println!("D = {:.4} (R2 = {:.4})", est.dimension, est.r_squared);
    Ok(())
}
