//! Row-column electrode addressing.
//!
//! Rows of one auxetic layer and columns of the other share drive lines,
//! so one static energization locks exactly the outer product of the
//! chosen row and column sets — a combinatorial rectangle. The hold is
//! DC and cannot be time-multiplexed without losing force, so patterns
//! that are not rectangles are reported as unreachable rather than
//! scanned.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::mask::LockMask;

/// Energization plan for a requested lock pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AddressPlan {
    pub rows_energized: BTreeSet<usize>,
    pub cols_energized: BTreeSet<usize>,
    /// The pattern the plan actually locks: rows × cols.
    pub achieved: LockMask,
    /// Cells the plan locks beyond the request.
    pub unreachable_extra: BTreeSet<(usize, usize)>,
    /// Requested cells no static plan can reach. Always empty for the
    /// row/column-superset strategy used here; kept so callers can
    /// report both failure directions uniformly.
    pub unreachable_missing: BTreeSet<(usize, usize)>,
}

impl AddressPlan {
    /// True when the plan locks exactly the requested cells.
    pub fn is_exact(&self) -> bool {
        self.unreachable_extra.is_empty() && self.unreachable_missing.is_empty()
    }
}

/// Plans the energization for a target pattern.
///
/// Energizes every row and every column that contains a requested cell;
/// the achieved pattern is their outer product, a superset of the
/// request. The plan is exact iff the request is itself a combinatorial
/// rectangle (the empty pattern counts: no rows, no columns).
pub fn plan_locking(target: &LockMask) -> Result<AddressPlan> {
    if target.rows() == 0 || target.cols() == 0 {
        return Err(Error::Domain("target grid must be non-empty".into()));
    }
    let mut rows_energized = BTreeSet::new();
    let mut cols_energized = BTreeSet::new();
    for r in 0..target.rows() {
        for c in 0..target.cols() {
            if target.get(r, c) {
                rows_energized.insert(r);
                cols_energized.insert(c);
            }
        }
    }
    let achieved = verify_plan(
        &rows_energized,
        &cols_energized,
        (target.rows(), target.cols()),
    )?;
    let unreachable_extra: BTreeSet<(usize, usize)> =
        achieved.difference(target).into_iter().collect();
    let unreachable_missing: BTreeSet<(usize, usize)> =
        target.difference(&achieved).into_iter().collect();
    Ok(AddressPlan {
        rows_energized,
        cols_energized,
        achieved,
        unreachable_extra,
        unreachable_missing,
    })
}

/// Forward-simulates an energization: the locked pattern is true exactly
/// on rows × cols.
pub fn verify_plan(
    rows: &BTreeSet<usize>,
    cols: &BTreeSet<usize>,
    shape: (usize, usize),
) -> Result<LockMask> {
    let (n_rows, n_cols) = shape;
    if let Some(&r) = rows.iter().find(|&&r| r >= n_rows) {
        return Err(Error::IndexOutOfRange {
            row: r,
            col: 0,
            rows: n_rows,
            cols: n_cols,
        });
    }
    if let Some(&c) = cols.iter().find(|&&c| c >= n_cols) {
        return Err(Error::IndexOutOfRange {
            row: 0,
            col: c,
            rows: n_rows,
            cols: n_cols,
        });
    }
    let mut mask = LockMask::new(n_rows, n_cols);
    for &r in rows {
        for &c in cols {
            mask.set(r, c, true);
        }
    }
    Ok(mask)
}

/// Names of the demonstration lock patterns on the 5×5 array.
pub const PRESET_NAMES: [&str; 6] = [
    "full",
    "none",
    "top-right-36",
    "right-40",
    "right-60",
    "top-40",
];

/// Demonstration lock patterns, all combinatorial rectangles on a 5×5
/// grid. Row 0 is the top of the array.
pub fn preset(name: &str) -> Option<LockMask> {
    let rows: &[usize] = match name {
        "full" => &[0, 1, 2, 3, 4],
        "none" => &[],
        "top-right-36" => &[0, 1, 2],
        "right-40" | "right-60" => &[0, 1, 2, 3, 4],
        "top-40" => &[0, 1],
        _ => return None,
    };
    let cols: &[usize] = match name {
        "full" => &[0, 1, 2, 3, 4],
        "none" => &[],
        "top-right-36" => &[2, 3, 4],
        "right-40" => &[3, 4],
        "right-60" => &[2, 3, 4],
        "top-40" => &[0, 1, 2, 3, 4],
        _ => return None,
    };
    let mut mask = LockMask::new(5, 5);
    for &r in rows {
        for &c in cols {
            mask.set(r, c, true);
        }
    }
    Some(mask)
}
