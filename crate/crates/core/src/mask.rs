//! Boolean lock masks over a cell grid, shared by the spring-array,
//! addressing, and display models.
//!
//! File format: one text line per row, characters `0` (free) and `1`
//! (locked). Row 0 is the top of the array.

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LockMask {
    rows: usize,
    cols: usize,
    cells: Vec<bool>,
}

impl LockMask {
    /// All-free mask.
    pub fn new(rows: usize, cols: usize) -> LockMask {
        LockMask {
            rows,
            cols,
            cells: vec![false; rows * cols],
        }
    }

    /// All-locked mask.
    pub fn full(rows: usize, cols: usize) -> LockMask {
        LockMask {
            rows,
            cols,
            cells: vec![true; rows * cols],
        }
    }

    /// Locks the leftmost `count` columns.
    pub fn leftmost_columns(rows: usize, cols: usize, count: usize) -> LockMask {
        let mut mask = LockMask::new(rows, cols);
        for r in 0..rows {
            for c in 0..count.min(cols) {
                mask.set(r, c, true);
            }
        }
        mask
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.cells[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, locked: bool) {
        self.cells[row * self.cols + col] = locked;
    }

    pub fn count_locked(&self) -> usize {
        self.cells.iter().filter(|&&b| b).count()
    }

    /// Lock states of one row, left to right.
    pub fn row(&self, row: usize) -> Vec<bool> {
        (0..self.cols).map(|c| self.get(row, c)).collect()
    }

    /// Lock states of one column, top to bottom.
    pub fn column(&self, col: usize) -> Vec<bool> {
        (0..self.rows).map(|r| self.get(r, col)).collect()
    }

    /// Flips every cell.
    pub fn complement(&self) -> LockMask {
        LockMask {
            rows: self.rows,
            cols: self.cols,
            cells: self.cells.iter().map(|b| !b).collect(),
        }
    }

    /// Mirrors the mask left-right.
    pub fn mirror_columns(&self) -> LockMask {
        let mut out = LockMask::new(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, self.cols - 1 - c, self.get(r, c));
            }
        }
        out
    }

    /// Cells set in `self` but absent from `other`, in row-major order.
    pub fn difference(&self, other: &LockMask) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) && !other.get(r, c) {
                    out.push((r, c));
                }
            }
        }
        out
    }

    pub fn load(path: &Path) -> Result<LockMask> {
        let text = std::fs::read_to_string(path)?;
        LockMask::parse(&text, &path.display().to_string())
    }

    pub fn parse(text: &str, source: &str) -> Result<LockMask> {
        let mut rows: Vec<Vec<bool>> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut row = Vec::with_capacity(line.len());
            for ch in line.chars() {
                match ch {
                    '0' => row.push(false),
                    '1' => row.push(true),
                    other => {
                        return Err(Error::Parse {
                            path: source.to_string(),
                            line: idx + 1,
                            msg: format!("unexpected character `{other}` (expected 0 or 1)"),
                        })
                    }
                }
            }
            if let Some(first) = rows.first() {
                if row.len() != first.len() {
                    return Err(Error::Parse {
                        path: source.to_string(),
                        line: idx + 1,
                        msg: format!(
                            "row has {} cells but earlier rows have {}",
                            row.len(),
                            first.len()
                        ),
                    });
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse {
                path: source.to_string(),
                line: 1,
                msg: "mask file has no rows".into(),
            });
        }
        let cols = rows[0].len();
        Ok(LockMask {
            rows: rows.len(),
            cols,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_string())?;
        Ok(())
    }

    /// Errors unless the mask is exactly `rows` x `cols`.
    pub fn expect_dims(&self, rows: usize, cols: usize) -> Result<()> {
        if self.rows != rows || self.cols != cols {
            return Err(Error::Invariant(format!(
                "mask is {}x{}, expected {rows}x{cols}",
                self.rows, self.cols
            )));
        }
        Ok(())
    }
}

impl fmt::Display for LockMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                f.write_str(if self.get(r, c) { "1" } else { "0" })?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}
