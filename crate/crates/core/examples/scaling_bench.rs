//! Times the measurement of full-colour noise images of growing size.
//!
//! ```text
//! cargo run --release --example scaling_bench -- 256 512 1024 2048
//! ```

use boxmerge::cli::{cmd_bench, BenchArgs, REFERENCE_MS_PER_MEGAPIXEL};

fn main() {
    let sizes: Vec<u32> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("sizes are integers"))
        .collect();
    let sizes = if sizes.is_empty() {
        vec![256, 512, 1024, 2048]
    } else {
        sizes
    };

    let rows = cmd_bench(&BenchArgs {
        sizes,
        seed: 1,
        repeats: 3,
    })
    .expect("bench");
    println!(
        "{:>6} {:>8} {:>10} {:>10} {:>7}",
        "size", "MP", "ms", "ms/MP", "D"
    );
    for r in &rows {
        println!(
            "{:>6} {:>8.3} {:>10.2} {:>10.2} {:>7.4}",
            r.size, r.megapixels, r.ms, r.ms_per_megapixel, r.dimension
        );
    }
    if let [first, .., last] = rows.as_slice() {
        println!(
            "time ratio {}px / {}px: {:.2} for a pixel ratio of {:.1}",
            last.size,
            first.size,
            last.ms / first.ms,
            last.megapixels / first.megapixels
        );
    }
    println!("reference: ~{REFERENCE_MS_PER_MEGAPIXEL:.0} ms/MP for an interpreted implementation");
}
