//! Synthetic images of known dimension.
//!
//! * line: `(i, i, 255 - i, i, i)` for `i in 0..256`, everything else
//!   transparent (D = 1)
//! * plane: red ramps along x, green ramps down along y, blue fixed at 128
//!   (D = 2)
//! * noise1/2/3: the plane with uniform random blue, then green and blue,
//!   then all three channels (D = 3, 4, 5)
//!
//! Noise comes from ChaCha8 seeded with `seed_from_u64`, drawing one byte per
//! noisy channel in r, g, b order while walking pixels row by row. The
//! stream is platform independent.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{colour_axes, image_to_pointset, AlphaPolicy, RasterImage, Rgba};
use crate::error::{Error, Result};
use crate::pointset::PointSet;

/// Side of the square test images.
pub const FIXTURE_SIZE: u32 = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixtureKind {
    Line,
    Plane,
    Noise1,
    Noise2,
    Noise3,
}

impl FixtureKind {
    pub const ALL: [FixtureKind; 5] = [
        FixtureKind::Line,
        FixtureKind::Plane,
        FixtureKind::Noise1,
        FixtureKind::Noise2,
        FixtureKind::Noise3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FixtureKind::Line => "line",
            FixtureKind::Plane => "plane",
            FixtureKind::Noise1 => "noise1",
            FixtureKind::Noise2 => "noise2",
            FixtureKind::Noise3 => "noise3",
        }
    }

    /// Dimension the fixture is built to have.
    pub fn nominal_dimension(self) -> f64 {
        match self {
            FixtureKind::Line => 1.0,
            FixtureKind::Plane => 2.0,
            FixtureKind::Noise1 => 3.0,
            FixtureKind::Noise2 => 4.0,
            FixtureKind::Noise3 => 5.0,
        }
    }

    pub fn noisy_channels(self) -> u8 {
        match self {
            FixtureKind::Line | FixtureKind::Plane => 0,
            FixtureKind::Noise1 => 1,
            FixtureKind::Noise2 => 2,
            FixtureKind::Noise3 => 3,
        }
    }
}

impl fmt::Display for FixtureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FixtureKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        FixtureKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                format!("unknown fixture '{s}' (expected line, plane, noise1, noise2 or noise3)")
            })
    }
}

/// A fixture kind together with the seed used by the noise variants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub kind: FixtureKind,
    pub seed: u64,
}

impl Fixture {
    pub fn new(kind: FixtureKind, seed: u64) -> Self {
        Self { kind, seed }
    }

    /// The fixture as a 256x256 RGBA image.
    pub fn render(&self) -> RasterImage {
        match self.kind {
            FixtureKind::Line => RasterImage::from_fn(FIXTURE_SIZE, FIXTURE_SIZE, |x, y| {
                if x == y {
                    let i = x as u8;
                    [255 - i, i, i, 255]
                } else {
                    [0, 0, 0, 0]
                }
            }),
            FixtureKind::Plane => RasterImage::from_fn(FIXTURE_SIZE, FIXTURE_SIZE, |x, y| {
                [x as u8, 255 - y as u8, 128, 255]
            }),
            kind => noise_raster(FIXTURE_SIZE, FIXTURE_SIZE, kind.noisy_channels(), self.seed),
        }
    }

    pub fn point_set(&self) -> PointSet {
        match self.kind {
            FixtureKind::Line => gen_diagonal_line(),
            FixtureKind::Plane => gen_gradient_plane(),
            kind => image_to_pointset(&self.render(), AlphaPolicy::default())
                .unwrap_or_else(|e| unreachable!("{kind} fixture is opaque: {e}")),
        }
    }
}

pub fn gen_diagonal_line() -> PointSet {
    let axes = colour_axes(FIXTURE_SIZE, FIXTURE_SIZE).expect("non-zero axes");
    PointSet::new(axes, (0..FIXTURE_SIZE).map(|i| [i, i, 255 - i, i, i]))
        .expect("line points lie inside the axes")
        .with_frame_size(u64::from(FIXTURE_SIZE * FIXTURE_SIZE))
}

pub fn gen_gradient_plane() -> PointSet {
    let axes = colour_axes(FIXTURE_SIZE, FIXTURE_SIZE).expect("non-zero axes");
    let points =
        (0..FIXTURE_SIZE).flat_map(|x| (0..FIXTURE_SIZE).map(move |y| [x, y, x, 255 - y, 128]));
    PointSet::new(axes, points)
        .expect("plane points lie inside the axes")
        .with_frame_size(u64::from(FIXTURE_SIZE * FIXTURE_SIZE))
}

/// 256x256 gradient plane with 1, 2 or 3 channels replaced by noise.
pub fn gen_noise(noisy_channels: u8, seed: u64) -> Result<PointSet> {
    let img = noise_image(FIXTURE_SIZE, FIXTURE_SIZE, noisy_channels, seed)?;
    image_to_pointset(&img, AlphaPolicy::default())
}

/// Noise fixture of arbitrary size. The gradients are stretched so they
/// still span 0..=255 across the frame.
pub fn noise_image(width: u32, height: u32, noisy_channels: u8, seed: u64) -> Result<RasterImage> {
    if !(1..=3).contains(&noisy_channels) {
        return Err(Error::InvalidNoiseChannels(noisy_channels));
    }
    Ok(noise_raster(width, height, noisy_channels, seed))
}

fn noise_raster(width: u32, height: u32, noisy_channels: u8, seed: u64) -> RasterImage {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    RasterImage::from_fn(width, height, |x, y| {
        let red = ((u64::from(x) * 256) / u64::from(width)) as u8;
        let green = 255 - ((u64::from(y) * 256) / u64::from(height)) as u8;
        let mut px: Rgba = [red, green, 128, 255];
        // noisy channels are the last `noisy_channels` of r, g, b
        for channel in &mut px[3 - noisy_channels as usize..3] {
            *channel = rng.random();
        }
        px
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_endpoints() {
        let line = gen_diagonal_line();
        assert_eq!(line.len(), 256);
        assert!(line.contains(&[0, 0, 255, 0, 0]));
        assert!(line.contains(&[255, 255, 0, 255, 255]));
    }

    #[test]
    fn plane_corners() {
        let plane = gen_gradient_plane();
        assert_eq!(plane.len(), 65536);
        assert!(plane.contains(&[0, 0, 0, 255, 128]));
        assert!(plane.contains(&[255, 255, 255, 0, 128]));
    }

    #[test]
    fn rendered_fixtures_embed_to_generated_sets() {
        let policy = AlphaPolicy::default();
        let line = Fixture::new(FixtureKind::Line, 0).render();
        assert_eq!(line.visible_count(policy), 256);
        assert_eq!(
            image_to_pointset(&line, policy).unwrap(),
            gen_diagonal_line()
        );
        let plane = Fixture::new(FixtureKind::Plane, 0).render();
        assert_eq!(
            image_to_pointset(&plane, policy).unwrap(),
            gen_gradient_plane()
        );
    }

    #[test]
    fn noise_channels_follow_the_plane_elsewhere() {
        let img = noise_image(256, 256, 1, 3).unwrap();
        for (x, y) in [(0, 0), (17, 200), (255, 255)] {
            let px = img.get(x, y);
            assert_eq!(px[0], x as u8);
            assert_eq!(px[1], 255 - y as u8);
            assert_eq!(px[3], 255);
        }
        let img = noise_image(256, 256, 2, 3).unwrap();
        assert!((0..256).all(|x| img.get(x, 9)[0] == x as u8));
    }

    #[test]
    fn noise_is_seed_deterministic() {
        let a = gen_noise(3, 7).unwrap();
        assert_eq!(a, gen_noise(3, 7).unwrap());
        assert_ne!(a, gen_noise(3, 8).unwrap());
        assert_eq!(a.len(), 65536);
    }

    #[test]
    fn noise_channels_are_actually_random() {
        let img = noise_image(256, 256, 3, 1).unwrap();
        for c in 0..3 {
            let mut seen = [false; 256];
            for px in img.pixels() {
                seen[px[c] as usize] = true;
            }
            assert!(seen.iter().all(|&s| s), "channel {c} misses values");
        }
    }

    #[test]
    fn stretched_gradients() {
        let img = noise_image(1024, 512, 1, 0).unwrap();
        assert_eq!(img.get(1023, 0)[0], 255);
        assert_eq!(img.get(4, 0)[0], 1);
        assert_eq!(img.get(0, 511)[1], 0);
    }

    #[test]
    fn channel_count_is_validated() {
        assert!(matches!(
            gen_noise(0, 1),
            Err(Error::InvalidNoiseChannels(0))
        ));
        assert!(matches!(
            gen_noise(4, 1),
            Err(Error::InvalidNoiseChannels(4))
        ));
    }

    #[test]
    fn kind_names_round_trip() {
        for k in FixtureKind::ALL {
            assert_eq!(k.name().parse::<FixtureKind>().unwrap(), k);
        }
        assert!("noise4".parse::<FixtureKind>().is_err());
    }
}
