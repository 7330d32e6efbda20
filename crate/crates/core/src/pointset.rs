//! Integer point sets in an arbitrary number of axes.

use std::fmt;

use crate::error::{Error, Result};
use crate::rows;

/// Extent of one axis: the number of addressable coordinate values.
///
/// Spatial axes use the image size in pixels, 8-bit colour axes use 256.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AxisSpec {
    length: u32,
}

impl AxisSpec {
    /// Length of an 8-bit colour channel axis.
    pub const COLOUR_LENGTH: u32 = 256;

    pub fn new(length: u32) -> Result<Self> {
        if length == 0 {
            return Err(Error::ZeroLengthAxis { axis: 0 });
        }
        Ok(Self { length })
    }

    pub fn colour() -> Self {
        Self {
            length: Self::COLOUR_LENGTH,
        }
    }

    pub fn length(self) -> u32 {
        self.length
    }
}

impl fmt::Display for AxisSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.length)
    }
}

/// Builds axis specs from raw lengths, reporting the offending axis index.
pub fn axes_from_lengths(lengths: &[u32]) -> Result<Vec<AxisSpec>> {
    lengths
        .iter()
        .enumerate()
        .map(|(axis, &len)| AxisSpec::new(len).map_err(|_| Error::ZeroLengthAxis { axis }))
        .collect()
}

/// A finite set of `E`-tuples of non-negative integers, each coordinate
/// bounded by its axis length.
///
/// Points are held in a canonical sorted order with duplicates removed, so
/// two sets built from the same points in different orders compare equal.
///
/// A set sampled from a raster also records its frame size (pixel
/// positions, transparent or not); the saturation cut-off is measured
/// against it.
#[derive(Clone, PartialEq, Eq)]
pub struct PointSet {
    axes: Vec<AxisSpec>,
    coords: Vec<u32>,
    frame_size: Option<u64>,
}

impl PointSet {
    /// Creates a set from an iterator of points. Duplicates collapse.
    pub fn new<I, P>(axes: Vec<AxisSpec>, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = P>,
        P: AsRef<[u32]>,
    {
        let mut builder = PointSetBuilder::new(axes)?;
        for p in points {
            builder.insert(p.as_ref())?;
        }
        Ok(builder.build())
    }

    pub fn empty(axes: Vec<AxisSpec>) -> Result<Self> {
        Ok(PointSetBuilder::new(axes)?.build())
    }

    pub fn builder(axes: Vec<AxisSpec>) -> Result<PointSetBuilder> {
        PointSetBuilder::new(axes)
    }

    pub fn axes(&self) -> &[AxisSpec] {
        &self.axes
    }

    /// Number of sites the set was sampled from, when known.
    pub fn frame_size(&self) -> Option<u64> {
        self.frame_size
    }

    /// # Panics
    ///
    /// If the frame is smaller than the number of points.
    pub fn with_frame_size(mut self, frame_size: u64) -> Self {
        assert!(
            frame_size >= self.len() as u64,
            "frame of {frame_size} sites cannot hold {} points",
            self.len()
        );
        self.frame_size = Some(frame_size);
        self
    }

    /// Number of axes, `E`.
    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Points in canonical (lexicographic) order.
    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[u32]> + '_ {
        self.coords.chunks_exact(self.dim())
    }

    pub fn contains(&self, point: &[u32]) -> bool {
        point.len() == self.dim() && rows::contains(&self.coords, self.dim(), point)
    }

    /// Returns the set with axes reordered: axis `i` of the result is axis
    /// `order[i]` of `self`, and every point is permuted the same way.
    ///
    /// # Panics
    ///
    /// If `order` is not a permutation of `0..E`.
    pub fn permute_axes(&self, order: &[usize]) -> PointSet {
        let dim = self.dim();
        let mut seen = vec![false; dim];
        assert_eq!(order.len(), dim, "permutation length must equal dimension");
        for &i in order {
            assert!(i < dim && !seen[i], "not a permutation: {order:?}");
            seen[i] = true;
        }
        let axes = order.iter().map(|&i| self.axes[i]).collect();
        let mut coords = Vec::with_capacity(self.coords.len());
        for p in self.iter() {
            coords.extend(order.iter().map(|&i| p[i]));
        }
        PointSet {
            axes,
            coords: rows::sort_dedup(coords, dim),
            frame_size: self.frame_size,
        }
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PointSet")
            .field("axes", &self.axes)
            .field("len", &self.len())
            .field("frame_size", &self.frame_size)
            .finish()
    }
}

/// Incremental construction of a [`PointSet`].
#[derive(Debug)]
pub struct PointSetBuilder {
    axes: Vec<AxisSpec>,
    coords: Vec<u32>,
}

impl PointSetBuilder {
    pub fn new(axes: Vec<AxisSpec>) -> Result<Self> {
        if axes.is_empty() {
            return Err(Error::NoAxes);
        }
        Ok(Self {
            axes,
            coords: Vec::new(),
        })
    }

    pub fn with_capacity(axes: Vec<AxisSpec>, points: usize) -> Result<Self> {
        let mut b = Self::new(axes)?;
        b.coords.reserve(points * b.axes.len());
        Ok(b)
    }

    /// Adds a point after checking it against the axis bounds.
    pub fn insert(&mut self, point: &[u32]) -> Result<()> {
        if point.len() != self.axes.len() {
            return Err(Error::DimensionMismatch {
                expected: self.axes.len(),
                got: point.len(),
            });
        }
        for (axis, (&value, spec)) in point.iter().zip(&self.axes).enumerate() {
            if value >= spec.length() {
                return Err(Error::CoordinateOutOfRange {
                    axis,
                    value,
                    length: spec.length(),
                });
            }
        }
        self.coords.extend_from_slice(point);
        Ok(())
    }

    pub fn build(self) -> PointSet {
        let dim = self.axes.len();
        PointSet {
            coords: rows::sort_dedup(self.coords, dim),
            axes: self.axes,
            frame_size: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn axes(lengths: &[u32]) -> Vec<AxisSpec> {
        axes_from_lengths(lengths).unwrap()
    }

    #[test]
    fn duplicates_collapse() {
        let ps = PointSet::new(axes(&[4, 4]), [[1, 2], [1, 2], [0, 3]]).unwrap();
        assert_eq!(ps.len(), 2);
        assert!(ps.contains(&[1, 2]));
        assert!(ps.contains(&[0, 3]));
        assert!(!ps.contains(&[3, 0]));
    }

    #[test]
    fn insertion_order_does_not_matter() {
        let a = PointSet::new(axes(&[8, 8, 8]), [[1, 2, 3], [7, 0, 0], [0, 0, 1]]).unwrap();
        let b = PointSet::new(axes(&[8, 8, 8]), [[0, 0, 1], [1, 2, 3], [7, 0, 0]]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_out_of_range_coordinate() {
        let err = PointSet::new(axes(&[4, 2]), [[1, 2]]).unwrap_err();
        assert!(matches!(
            err,
            Error::CoordinateOutOfRange {
                axis: 1,
                value: 2,
                length: 2
            }
        ));
    }

    #[test]
    fn rejects_wrong_arity() {
        let err = PointSet::new(axes(&[4, 4]), [vec![1u32, 2, 3]]).unwrap_err();
        assert!(matches!(
            err,
            Error::DimensionMismatch {
                expected: 2,
                got: 3
            }
        ));
    }

    #[test]
    fn rejects_degenerate_axes() {
        assert!(matches!(PointSet::empty(vec![]), Err(Error::NoAxes)));
        assert!(matches!(
            axes_from_lengths(&[4, 0]),
            Err(Error::ZeroLengthAxis { axis: 1 })
        ));
    }

    #[test]
    fn permutation_moves_coordinates_with_axes() {
        let ps = PointSet::new(axes(&[4, 8, 16]), [[1, 2, 3]]).unwrap();
        let p = ps.permute_axes(&[2, 0, 1]);
        assert_eq!(p.axes(), axes(&[16, 4, 8]).as_slice());
        assert!(p.contains(&[3, 1, 2]));
    }

    #[test]
    #[should_panic]
    fn permutation_must_be_bijective() {
        let ps = PointSet::new(axes(&[4, 4]), [[0, 0]]).unwrap();
        let _ = ps.permute_axes(&[0, 0]);
    }
}
