use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("a point set needs at least one axis")]
    NoAxes,

    #[error("axis {axis} has length 0")]
    ZeroLengthAxis { axis: usize },

    #[error("point has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("coordinate {value} on axis {axis} is outside [0, {length})")]
    CoordinateOutOfRange {
        axis: usize,
        value: u32,
        length: u32,
    },

    #[error("smallest axis length is {min_length}; at least 2 is needed for one halving")]
    MinAxisTooSmall { min_length: u32 },

    #[error("partition count {s} exceeds the length {length} of axis {axis}")]
    ScaleExceedsAxis { s: u32, axis: usize, length: u32 },

    #[error("partition count {s} is odd and cannot be halved")]
    OddScale { s: u32 },

    #[error("partition count must be at least 1")]
    ZeroScale,

    #[error("invalid scale series: {0}")]
    InvalidSeries(String),

    #[error("point set is empty")]
    EmptyPointSet,

    #[error("need at least 2 kept scales with distinct abscissae to fit a slope, got {kept}")]
    InsufficientPoints { kept: usize },

    #[error("cut-off fraction {0} is outside (0, 1]")]
    InvalidCutoff(f64),

    #[error("every pixel is transparent")]
    AllTransparent,

    #[error("image is {width}x{height}; both sides must be at least 2")]
    ImageTooSmall { width: u32, height: u32 },

    #[error("pixel buffer holds {got} pixels, expected {expected}")]
    PixelCountMismatch { expected: usize, got: usize },

    #[error("{path}: unsupported image format ({detail})")]
    UnsupportedFormat { path: PathBuf, detail: String },

    #[error("{path}: only 8-bit channels are supported, found {detail}")]
    BitDepthUnsupported { path: PathBuf, detail: String },

    #[error("{path}: decode failed: {source}")]
    Decode {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },

    #[error("{path}: encode failed: {source}")]
    Encode {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("input has {pixels} pixels, the limit is {limit}")]
    InputTooLarge { pixels: u64, limit: u64 },

    #[error("noisy channel count must be 1, 2 or 3, got {0}")]
    InvalidNoiseChannels(u8),
}
