//! Partition tables and the box-merging pass.
//!
//! The point set is mapped once onto the finest grid of the scale plan. Each
//! coarser table is obtained from the previous one by halving every box
//! coordinate and dropping repeated rows, so the points are never rescanned.
//! The halving is exact on a dyadic ladder:
//! `floor(floor(x*s/L) / 2) == floor(x*(s/2)/L)`.

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::rows;
use crate::scale::make_scale_plan;
use crate::series::{ScaleCount, ScaleSeries};

/// Index of the box containing coordinate `x` on an axis of length `length`
/// split into `s` equal partitions: `floor(x * s / length)`.
#[inline]
pub fn box_coordinate(x: u32, s: u32, length: u32) -> u32 {
    ((u64::from(x) * u64::from(s)) / u64::from(length)) as u32
}

/// Checks that `s` partitions fit on every axis of `ps`.
pub(crate) fn check_scale(ps: &PointSet, s: u32) -> Result<()> {
    if s == 0 {
        return Err(Error::ZeroScale);
    }
    for (axis, spec) in ps.axes().iter().enumerate() {
        if s > spec.length() {
            return Err(Error::ScaleExceedsAxis {
                s,
                axis,
                length: spec.length(),
            });
        }
    }
    Ok(())
}

/// Set of occupied box coordinates at one partition count.
///
/// Rows are packed into one `u64` per box when `E` fields of
/// `bit_length(s - 1)` bits fit, axis 0 in the most significant field, so
/// sorting the keys sorts the rows lexicographically. Wider tables fall back
/// to flat `u32` rows.
#[derive(Clone, Debug)]
pub struct PartitionTable {
    s: u32,
    dim: usize,
    storage: Storage,
}

#[derive(Clone, Debug)]
enum Storage {
    Packed { width: u32, keys: Vec<u64> },
    Wide { rows: Vec<u32> },
}

fn field_width(s: u32) -> u32 {
    (u32::BITS - s.saturating_sub(1).leading_zeros()).max(1)
}

fn packed_width(s: u32, dim: usize) -> Option<u32> {
    let width = field_width(s);
    (width as usize * dim <= 64).then_some(width)
}

/// Mask with every bit set except the top bit of each field.
fn halving_mask(width: u32, dim: usize) -> u64 {
    let mut top = 0u64;
    for i in 0..dim as u32 {
        top |= 1 << (i * width + width - 1);
    }
    !top
}

fn pack(row: impl Iterator<Item = u32>, width: u32) -> u64 {
    row.fold(0u64, |key, t| (key << width) | u64::from(t))
}

fn unpack(key: u64, width: u32, dim: usize) -> Vec<u32> {
    let field = (1u64 << width) - 1;
    (0..dim)
        .rev()
        .map(|i| ((key >> (i as u32 * width)) & field) as u32)
        .collect()
}

fn sort_dedup_keys(mut keys: Vec<u64>) -> Vec<u64> {
    keys.sort_unstable();
    keys.dedup();
    keys
}

impl PartitionTable {
    fn from_flat(s: u32, dim: usize, flat: Vec<u32>) -> Self {
        let storage = match packed_width(s, dim) {
            Some(width) => Storage::Packed {
                width,
                keys: sort_dedup_keys(
                    flat.chunks_exact(dim)
                        .map(|r| pack(r.iter().copied(), width))
                        .collect(),
                ),
            },
            None => Storage::Wide {
                rows: rows::sort_dedup(flat, dim),
            },
        };
        Self { s, dim, storage }
    }

    /// Builds a table from explicit rows; duplicates collapse.
    pub fn from_rows<I, R>(s: u32, dim: usize, rows_in: I) -> Result<Self>
    where
        I: IntoIterator<Item = R>,
        R: AsRef<[u32]>,
    {
        if s == 0 {
            return Err(Error::ZeroScale);
        }
        if dim == 0 {
            return Err(Error::NoAxes);
        }
        let mut flat = Vec::new();
        for r in rows_in {
            let r = r.as_ref();
            if r.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: r.len(),
                });
            }
            if let Some((axis, &value)) = r.iter().enumerate().find(|(_, &v)| v >= s) {
                return Err(Error::CoordinateOutOfRange {
                    axis,
                    value,
                    length: s,
                });
            }
            flat.extend_from_slice(r);
        }
        Ok(Self::from_flat(s, dim, flat))
    }

    /// Partition count per axis.
    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of non-empty boxes.
    pub fn n(&self) -> usize {
        match &self.storage {
            Storage::Packed { keys, .. } => keys.len(),
            Storage::Wide { rows } => rows.len() / self.dim,
        }
    }

    /// Whether rows are held as packed integer keys.
    pub fn is_packed(&self) -> bool {
        matches!(self.storage, Storage::Packed { .. })
    }

    /// Occupied box coordinates in lexicographic order.
    pub fn rows(&self) -> Box<dyn Iterator<Item = Vec<u32>> + '_> {
        let dim = self.dim;
        match &self.storage {
            Storage::Packed { width, keys } => {
                Box::new(keys.iter().map(move |&k| unpack(k, *width, dim)))
            }
            Storage::Wide { rows } => Box::new(rows.chunks_exact(dim).map(<[u32]>::to_vec)),
        }
    }

    pub fn contains(&self, row: &[u32]) -> bool {
        if row.len() != self.dim || row.iter().any(|&v| v >= self.s) {
            return false;
        }
        match &self.storage {
            Storage::Packed { width, keys } => keys
                .binary_search(&pack(row.iter().copied(), *width))
                .is_ok(),
            Storage::Wide { rows } => rows::contains(rows, self.dim, row),
        }
    }

    /// Consuming form of [`merge_halve`]; reuses the row buffer.
    pub fn into_halved(self) -> Result<PartitionTable> {
        if !self.s.is_multiple_of(2) {
            return Err(Error::OddScale { s: self.s });
        }
        let storage = match self.storage {
            Storage::Packed { width, mut keys } => {
                let mask = halving_mask(width, self.dim);
                for k in &mut keys {
                    *k = (*k >> 1) & mask;
                }
                Storage::Packed {
                    width,
                    keys: sort_dedup_keys(keys),
                }
            }
            Storage::Wide { mut rows } => {
                for v in &mut rows {
                    *v >>= 1;
                }
                Storage::Wide {
                    rows: rows::sort_dedup(rows, self.dim),
                }
            }
        };
        Ok(PartitionTable {
            s: self.s / 2,
            dim: self.dim,
            storage,
        })
    }
}

impl PartialEq for PartitionTable {
    fn eq(&self, other: &Self) -> bool {
        if self.s != other.s || self.dim != other.dim || self.n() != other.n() {
            return false;
        }
        match (&self.storage, &other.storage) {
            (Storage::Packed { width: a, keys: ka }, Storage::Packed { width: b, keys: kb })
                if a == b =>
            {
                ka == kb
            }
            _ => self.rows().eq(other.rows()),
        }
    }
}

impl Eq for PartitionTable {}

fn box_row<'a>(point: &'a [u32], lengths: &'a [u32], s: u32) -> impl Iterator<Item = u32> + 'a {
    point
        .iter()
        .zip(lengths)
        .map(move |(&x, &len)| box_coordinate(x, s, len))
}

/// Maps every point of `ps` to its box at partition count `s`.
pub fn initial_partition(ps: &PointSet, s: u32) -> Result<PartitionTable> {
    check_scale(ps, s)?;
    let dim = ps.dim();
    let lengths: Vec<u32> = ps.axes().iter().map(|a| a.length()).collect();
    if let Some(width) = packed_width(s, dim) {
        let keys = ps
            .iter()
            .map(|p| pack(box_row(p, &lengths, s), width))
            .collect();
        return Ok(PartitionTable {
            s,
            dim,
            storage: Storage::Packed {
                width,
                keys: sort_dedup_keys(keys),
            },
        });
    }
    let mut flat = Vec::with_capacity(ps.len() * dim);
    for p in ps.iter() {
        flat.extend(box_row(p, &lengths, s));
    }
    Ok(PartitionTable {
        s,
        dim,
        storage: Storage::Wide {
            rows: rows::sort_dedup(flat, dim),
        },
    })
}

/// Coarsens a table to `s / 2` by integer-halving every box coordinate.
pub fn merge_halve(table: &PartitionTable) -> Result<PartitionTable> {
    table.clone().into_halved()
}

/// Counts non-empty boxes at every scale of the plan for `ps.axes()`,
/// scanning the points once at the finest scale.
pub fn box_merge_series(ps: &PointSet) -> Result<ScaleSeries> {
    if ps.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let plan = make_scale_plan(ps.axes())?;
    let mut entries = Vec::with_capacity(plan.scales().len());
    let mut table = initial_partition(ps, plan.s_max())?;
    for (i, &s) in plan.scales().iter().enumerate() {
        if i > 0 {
            table = table.into_halved()?;
        }
        debug_assert_eq!(table.s(), s);
        entries.push(ScaleCount {
            s,
            n: table.n() as u64,
        });
    }
    Ok(ScaleSeries::from_parts(
        entries,
        ps.len() as u64,
        ps.frame_size(),
    ))
}
