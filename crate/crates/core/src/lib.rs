//! Fractal (box) dimension of point sets and colour images by box merging.
//!
//! Points are mapped once onto the finest dyadic grid that fits every axis.
//! Coarser grids come from halving the occupied box coordinates and dropping
//! duplicate rows, so counting all scales costs one pass over the input plus
//! the shrinking tables. Colour images become 5-D sets `(x, y, r, g, b)`;
//! their dimension ranges from 2 for a smooth opaque image up to 5 for full
//! colour noise, and lower when transparent pixels are left out.
//!
//! ```
//! use boxmerge::{estimate_dimension, gen_gradient_plane, FitConfig};
//!
//! let plane = gen_gradient_plane();
//! let est = estimate_dimension(&plane, &FitConfig::default()).unwrap();
//! assert!((est.dimension - 2.0).abs() < 1e-9);
//! ```

pub mod cli;
pub mod error;
pub mod estimate;
pub mod imaging;
pub mod oracle;
pub mod partition;
pub mod pointset;
pub mod report;
mod rows;
pub mod scale;
pub mod series;

pub use error::{Error, Result};
pub use estimate::{
    apply_cutoff, estimate_dimension, estimate_from_series, fit_loglog, CutoffReference,
    CutoffSplit, DimensionEstimate, FitConfig, LineFit, LogLogPoint,
};
pub use imaging::{
    decode_image_file, gen_diagonal_line, gen_gradient_plane, gen_noise, image_to_pointset,
    AlphaPolicy, Fixture, FixtureKind, RasterImage,
};
pub use oracle::{naive_box_count, naive_series};
pub use partition::{
    box_coordinate, box_merge_series, initial_partition, merge_halve, PartitionTable,
};
pub use pointset::{AxisSpec, PointSet, PointSetBuilder};
pub use report::RunReport;
pub use scale::{make_scale_plan, ScalePlan};
pub use series::{ScaleCount, ScaleSeries};
