//! Transparent pixels drop out of the embedding, so an image can describe
//! sets thinner than its frame. A colour ring and a sparse lattice of single
//! opaque pixels are measured next to the fully opaque image.
//!
//! The cut-off is shown against both references. Measured against the frame,
//! the sparse lattice keeps its saturated fine scales (every point alone in
//! its box) and the slope drops; measured against the visible points, those
//! scales are rejected and the lattice reads as the 2-D set it samples.

use boxmerge::{
    estimate_dimension, image_to_pointset, AlphaPolicy, CutoffReference, FitConfig, RasterImage,
};

fn main() -> Result<(), boxmerge::Error> {
    let size = 512u32;
    let centre = f64::from(size) / 2.0;

    let ring = RasterImage::from_fn(size, size, |x, y| {
        let (dx, dy) = (f64::from(x) - centre, f64::from(y) - centre);
        let r = (dx * dx + dy * dy).sqrt();
        let angle = dy.atan2(dx);
        let hue = ((angle + std::f64::consts::PI) / std::f64::consts::TAU * 255.0) as u8;
        let alpha = if (r - 200.0).abs() < 0.75 { 255 } else { 0 };
        [hue, 255 - hue, 128, alpha]
    });
    let dust = RasterImage::from_fn(size, size, |x, y| {
        let alpha = if x % 16 == 0 && y % 16 == 0 { 255 } else { 0 };
        [(x / 2) as u8, (y / 2) as u8, 0, alpha]
    });
    let opaque = RasterImage::from_fn(size, size, |x, y| [(x / 2) as u8, (y / 2) as u8, 0, 255]);

    let by_frame = FitConfig::default();
    let by_points = FitConfig::default().with_reference(CutoffReference::Points);
    println!(
        "{:<12} {:>7}  {:>9} {:>9}",
        "image", "points", "D(frame)", "D(points)"
    );
    for (name, img) in [("ring", &ring), ("sparse grid", &dust), ("opaque", &opaque)] {
        let ps = image_to_pointset(img, AlphaPolicy::default())?;
        let frame = estimate_dimension(&ps, &by_frame)?;
        let points = estimate_dimension(&ps, &by_points)?;
        println!(
            "{name:<12} {:>7}  {:>9.3} {:>9.3}",
            ps.len(),
            frame.dimension,
            points.dimension
        );
    }
    Ok(())
}
