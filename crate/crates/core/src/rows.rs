//! Flat row storage shared by point sets and partition tables.
//!
//! A table of `E`-tuples is kept as one `Vec<u32>` of length `len * E`,
//! sorted lexicographically with duplicates removed. Keeping a canonical
//! order makes equality between tables a plain slice comparison.

use std::cmp::Ordering;

/// Sorts the rows of `flat` (each `dim` wide) and drops duplicates.
pub(crate) fn sort_dedup(flat: Vec<u32>, dim: usize) -> Vec<u32> {
    debug_assert!(dim > 0 && flat.len().is_multiple_of(dim));
    let count = flat.len() / dim;
    if count <= 1 {
        return flat;
    }
    if is_strictly_sorted(&flat, dim) {
        return flat;
    }

    let row = |i: usize| &flat[i * dim..(i + 1) * dim];
    let mut order: Vec<usize> = (0..count).collect();
    order.sort_unstable_by(|&a, &b| row(a).cmp(row(b)));
    order.dedup_by(|a, b| row(*a) == row(*b));

    let mut out = Vec::with_capacity(order.len() * dim);
    for i in order {
        out.extend_from_slice(row(i));
    }
    out
}

fn is_strictly_sorted(flat: &[u32], dim: usize) -> bool {
    flat.chunks_exact(dim)
        .zip(flat.chunks_exact(dim).skip(1))
        .all(|(a, b)| a.cmp(b) == Ordering::Less)
}

/// Binary search for `needle` in a table produced by [`sort_dedup`].
pub(crate) fn contains(flat: &[u32], dim: usize, needle: &[u32]) -> bool {
    let count = flat.len() / dim;
    let (mut lo, mut hi) = (0usize, count);
    while lo < hi {
        let mid = (lo + hi) / 2;
        match flat[mid * dim..(mid + 1) * dim].cmp(needle) {
            Ordering::Less => lo = mid + 1,
            Ordering::Greater => hi = mid,
            Ordering::Equal => return true,
        }
    }
    false
}
