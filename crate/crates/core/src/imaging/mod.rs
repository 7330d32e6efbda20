//! Colour images as 5-D point sets `(x, y, r, g, b)`.
//!
//! Transparent pixels are left out, which lets an image describe sets
//! thinner than its full frame (a coloured line has dimension 1).

mod fixtures;
mod io;

pub use fixtures::{
    gen_diagonal_line, gen_gradient_plane, gen_noise, noise_image, Fixture, FixtureKind,
    FIXTURE_SIZE,
};
pub use io::{decode_image_file, write_png};

use crate::error::{Error, Result};
use crate::pointset::{AxisSpec, PointSet, PointSetBuilder};

pub type Rgba = [u8; 4];

/// 8-bit RGBA raster, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RasterImage {
    width: u32,
    height: u32,
    pixels: Vec<Rgba>,
}

impl RasterImage {
    pub fn new(width: u32, height: u32, pixels: Vec<Rgba>) -> Result<Self> {
        let expected = width as usize * height as usize;
        if pixels.len() != expected {
            return Err(Error::PixelCountMismatch {
                expected,
                got: pixels.len(),
            });
        }
        Ok(Self {
            width,
            height,
            pixels,
        })
    }

    pub fn from_fn(width: u32, height: u32, mut f: impl FnMut(u32, u32) -> Rgba) -> Self {
        let mut pixels = Vec::with_capacity(width as usize * height as usize);
        for y in 0..height {
            for x in 0..width {
                pixels.push(f(x, y));
            }
        }
        Self {
            width,
            height,
            pixels,
        }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn pixel_count(&self) -> usize {
        self.pixels.len()
    }

    pub fn pixels(&self) -> &[Rgba] {
        &self.pixels
    }

    pub fn get(&self, x: u32, y: u32) -> Rgba {
        self.pixels[y as usize * self.width as usize + x as usize]
    }

    /// Pixels with alpha strictly above `threshold`.
    pub fn visible_count(&self, policy: AlphaPolicy) -> usize {
        self.pixels
            .iter()
            .filter(|p| policy.is_visible(**p))
            .count()
    }

    pub fn into_raw(self) -> Vec<u8> {
        self.pixels.into_iter().flatten().collect()
    }
}

/// Pixels with `alpha <= threshold` are treated as transparent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AlphaPolicy {
    pub threshold: u8,
}

impl AlphaPolicy {
    pub fn new(threshold: u8) -> Self {
        Self { threshold }
    }

    pub fn is_visible(&self, px: Rgba) -> bool {
        px[3] > self.threshold
    }
}

/// Axes of the embedding: the two spatial extents followed by three colour
/// axes of length 256.
pub fn colour_axes(width: u32, height: u32) -> Result<Vec<AxisSpec>> {
    Ok(vec![
        AxisSpec::new(width)?,
        AxisSpec::new(height)?,
        AxisSpec::colour(),
        AxisSpec::colour(),
        AxisSpec::colour(),
    ])
}

/// One point `(x, y, r, g, b)` per visible pixel.
pub fn image_to_pointset(img: &RasterImage, policy: AlphaPolicy) -> Result<PointSet> {
    if img.width < 2 || img.height < 2 {
        return Err(Error::ImageTooSmall {
            width: img.width,
            height: img.height,
        });
    }
    let mut builder =
        PointSetBuilder::with_capacity(colour_axes(img.width, img.height)?, img.pixel_count())?;
    // x-major order feeds the builder already sorted
    for x in 0..img.width {
        for y in 0..img.height {
            let px = img.get(x, y);
            if policy.is_visible(px) {
                builder.insert(&[x, y, px[0].into(), px[1].into(), px[2].into()])?;
            }
        }
    }
    let ps = builder.build().with_frame_size(img.pixel_count() as u64);
    if ps.is_empty() {
        return Err(Error::AllTransparent);
    }
    Ok(ps)
}
