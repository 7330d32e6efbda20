//! Shows how the saturation cut-off changes the fit for the noise images
//! and prints the CSV table the command-line tool writes.

use boxmerge::{estimate_dimension, gen_noise, FitConfig, RunReport};

fn main() -> Result<(), boxmerge::Error> {
    let ps = gen_noise(2, 11)?;
    for fraction in [0.7, 0.8, 0.9, 0.95, 1.0] {
        let est = estimate_dimension(&ps, &FitConfig::new(fraction)?)?;
        println!(
            "cut-off {fraction:.2}: threshold {:>6.3}, kept {} rejected {}, D = {:.4}",
            est.threshold,
            est.kept.len(),
            est.rejected.len(),
            est.dimension
        );
    }

    let est = estimate_dimension(&ps, &FitConfig::default())?;
    let report = RunReport::new("noise2 seed 11", vec![256; 5], &est, 0.0);
    print!("\n{}", report.csv_string());
    Ok(())
}
