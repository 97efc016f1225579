//! Axial stiffness and bending of an m×n cell array with a per-cell
//! lock mask, composed as springs: cells in series down each column,
//! columns in parallel across the sheet.

use crate::auc::{self, AucGeometry, ModelParams, MAX_STRAIN};
use crate::dielectric::DielectricSpec;
use crate::error::{Error, Result};
use crate::mask::LockMask;
use crate::trace::Branch;

/// Spring-array layout and per-cell stiffnesses.
///
/// `rows` counts springs in series per column, not sheet rows: the
/// reference 5×5 sheet mounts with a half-cell offset, which drops one
/// cell per column from the load path, so its spring model is 4×5.
#[derive(Debug, Clone, PartialEq)]
pub struct ArrayConfig {
    /// Springs in series per column.
    pub rows: usize,
    /// Columns in parallel.
    pub cols: usize,
    /// Stiffness of a free cell, N/m.
    pub k_unlocked: f64,
    /// Stiffness of a locked cell, N/m.
    pub k_locked: f64,
    /// Lateral spacing between column axes, m.
    pub column_pitch: f64,
    /// Rest length of one cell along the pull axis, m.
    pub cell_rest_length: f64,
}

impl Default for ArrayConfig {
    fn default() -> Self {
        ArrayConfig {
            rows: 4,
            cols: 5,
            k_unlocked: 200.0,
            k_locked: 7.6 * 200.0,
            column_pitch: 20e-3,
            cell_rest_length: 37e-3,
        }
    }
}

impl ArrayConfig {
    pub fn validate(&self) -> Result<()> {
        if self.rows < 1 || self.cols < 1 {
            return Err(Error::Invariant(format!(
                "array: {}x{} must have at least one row and column",
                self.rows, self.cols
            )));
        }
        if !(self.k_unlocked > 0.0 && self.k_unlocked <= self.k_locked) {
            return Err(Error::Invariant(format!(
                "array: need 0 < k_unlocked <= k_locked, got {} / {}",
                self.k_unlocked, self.k_locked
            )));
        }
        if !(self.column_pitch > 0.0) {
            return Err(Error::Invariant(format!(
                "array: column_pitch = {} m must be > 0",
                self.column_pitch
            )));
        }
        if !(self.cell_rest_length > 0.0) {
            return Err(Error::Invariant(format!(
                "array: cell_rest_length = {} m must be > 0",
                self.cell_rest_length
            )));
        }
        Ok(())
    }

    /// Rest length of one column, m.
    pub fn column_rest_length(&self) -> f64 {
        self.rows as f64 * self.cell_rest_length
    }

    /// Signed offset of column `col` from the array centerline, m.
    pub fn column_offset(&self, col: usize) -> f64 {
        (col as f64 - (self.cols as f64 - 1.0) / 2.0) * self.column_pitch
    }
}

/// Bending solution of a strained array with rigid end bars.
#[derive(Debug, Clone, PartialEq)]
pub struct BendResult {
    /// Total relative rotation of the two end bars, rad.
    pub total_angle: f64,
    /// Extension of each column, m.
    pub per_column_extension: Vec<f64>,
    /// Elastic energy stored at the minimum, J.
    pub energy: f64,
}

/// One point of a bending sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub locked_count: usize,
    pub total_angle: f64,
    pub energy: f64,
}

/// Per-cell (unlocked, locked) stiffness from the single-cell model.
///
/// With `pinned_ratio` the locked value is overridden to
/// `ratio × k_unlocked`, the way array predictions were made from the
/// measured single-cell ratio; otherwise both slopes come from the
/// model curves and their ratio equals [`auc::stiffness_ratio`].
pub fn cell_stiffness_pair(
    geom: &AucGeometry,
    dielectric: &DielectricSpec,
    params: &ModelParams,
    strain_window: f64,
    pinned_ratio: Option<f64>,
) -> Result<(f64, f64)> {
    let grid: Vec<f64> = (0..51)
        .map(|i| strain_window * i as f64 / 50.0)
        .collect();
    let unlocked_params = ModelParams {
        voltage: 0.0,
        ..params.clone()
    };
    let unlocked = auc::force_strain_curve(&grid, geom, dielectric, &unlocked_params, Branch::Loading)?;
    let k_unlocked = auc::linear_stiffness(&unlocked, strain_window, geom.reference_length)?;
    let k_locked = match pinned_ratio {
        Some(ratio) => {
            if !(ratio >= 1.0) {
                return Err(Error::Domain(format!("pinned ratio {ratio} must be >= 1")));
            }
            ratio * k_unlocked
        }
        None => {
            let locked = auc::force_strain_curve(&grid, geom, dielectric, params, Branch::Loading)?;
            auc::linear_stiffness(&locked, strain_window, geom.reference_length)?
        }
    };
    Ok((k_unlocked, k_locked))
}

fn cell_k(cfg: &ArrayConfig, locked: bool) -> f64 {
    if locked {
        cfg.k_locked
    } else {
        cfg.k_unlocked
    }
}

/// Series stiffness of one column under the mask, N/m.
pub fn column_stiffness(cfg: &ArrayConfig, mask: &LockMask, col: usize) -> f64 {
    let inv: f64 = (0..cfg.rows)
        .map(|r| 1.0 / cell_k(cfg, mask.get(r, col)))
        .sum();
    1.0 / inv
}

/// Axial stiffness of the whole array: columns in parallel, cells in
/// series within a column. All cells free with r rows and c columns
/// gives (c/r)·k_unlocked.
pub fn axial_stiffness(cfg: &ArrayConfig, mask: &LockMask) -> Result<f64> {
    cfg.validate()?;
    mask.expect_dims(cfg.rows, cfg.cols)?;
    Ok((0..cfg.cols).map(|c| column_stiffness(cfg, mask, c)).sum())
}

/// Force law of a single cell, used by the nonlinear array solver.
pub trait CellModel {
    /// Pull force at `strain` for a free or locked cell, N.
    fn force(&self, strain: f64, locked: bool) -> Result<f64>;
}

/// Linear springs; reproduces the closed-form composition exactly.
#[derive(Debug, Clone, Copy)]
pub struct LinearCell {
    pub k_unlocked: f64,
    pub k_locked: f64,
    pub rest_length: f64,
}

impl CellModel for LinearCell {
    fn force(&self, strain: f64, locked: bool) -> Result<f64> {
        let k = if locked { self.k_locked } else { self.k_unlocked };
        Ok(k * strain * self.rest_length)
    }
}

/// The torque-balance cell: hinge elasticity plus, when locked, the
/// stack friction force on the loading branch.
#[derive(Debug, Clone)]
pub struct AucCell<'a> {
    pub geom: &'a AucGeometry,
    pub dielectric: &'a DielectricSpec,
    pub params: &'a ModelParams,
}

impl CellModel for AucCell<'_> {
    fn force(&self, strain: f64, locked: bool) -> Result<f64> {
        let params = if locked {
            self.params.clone()
        } else {
            ModelParams {
                voltage: 0.0,
                ..self.params.clone()
            }
        };
        auc::branch_force(strain, self.geom, self.dielectric, &params, Branch::Loading)
    }
}

/// Splits a column extension across its series cells so every cell
/// carries the same force. Returns the common force and each cell's
/// extension, m.
///
/// The shared force is bracketed by doubling and bisected; per cell the
/// strain is found by bisection on the monotone force law. A locked
/// cell whose zero-strain force already exceeds the shared force
/// contributes no extension (it has not broken away yet).
pub fn column_partition(
    cell: &dyn CellModel,
    locked: &[bool],
    rest_length: f64,
    total_extension: f64,
) -> Result<(f64, Vec<f64>)> {
    if locked.is_empty() {
        return Err(Error::EmptyInput);
    }
    if total_extension < 0.0 {
        return Err(Error::Domain(format!(
            "total_extension = {total_extension} m must be >= 0"
        )));
    }
    let strain_cap = MAX_STRAIN * (1.0 - 1e-9);
    let max_extension = rest_length * strain_cap * locked.len() as f64;
    if total_extension >= max_extension {
        return Err(Error::Domain(format!(
            "total_extension = {total_extension} m exceeds the mechanism limit {max_extension} m"
        )));
    }
    if total_extension == 0.0 {
        return Ok((0.0, vec![0.0; locked.len()]));
    }

    // Strain of one cell at shared force f.
    let cell_strain = |is_locked: bool, f: f64| -> Result<f64> {
        if cell.force(0.0, is_locked)? >= f {
            return Ok(0.0);
        }
        let (mut lo, mut hi) = (0.0, strain_cap);
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if cell.force(mid, is_locked)? < f {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    };
    let extension_at = |f: f64| -> Result<f64> {
        let mut total = 0.0;
        for &is_locked in locked {
            total += cell_strain(is_locked, f)? * rest_length;
        }
        Ok(total)
    };

    // Bracket the force, then bisect on the monotone extension.
    let mut hi = locked
        .iter()
        .map(|&l| cell.force(total_extension / (rest_length * locked.len() as f64), l))
        .try_fold(0.0_f64, |acc, f| f.map(|f| acc.max(f)))?
        .max(1e-12);
    let mut grow = 0;
    while extension_at(hi)? < total_extension {
        hi *= 2.0;
        grow += 1;
        if grow > 200 {
            return Err(Error::NoConvergence {
                residual: extension_at(hi)? - total_extension,
                iterations: grow,
            });
        }
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if extension_at(mid)? < total_extension {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let force = 0.5 * (lo + hi);
    let extensions: Vec<f64> = locked
        .iter()
        .map(|&l| cell_strain(l, force).map(|s| s * rest_length))
        .collect::<Result<_>>()?;
    Ok((force, extensions))
}

/// Total pull force of the array at each grid strain, solving the
/// per-column force balance and summing columns.
pub fn axial_force_curve(
    cfg: &ArrayConfig,
    mask: &LockMask,
    strain_grid: &[f64],
    cell: &dyn CellModel,
) -> Result<Vec<(f64, f64)>> {
    cfg.validate()?;
    mask.expect_dims(cfg.rows, cfg.cols)?;
    if strain_grid.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Domain("strain grid must be sorted ascending".into()));
    }
    let mut out = Vec::with_capacity(strain_grid.len());
    for &strain in strain_grid {
        let extension = strain * cfg.column_rest_length();
        let mut total = 0.0;
        for c in 0..cfg.cols {
            let locked = mask.column(c);
            let (force, _) =
                column_partition(cell, &locked, cfg.cell_rest_length, extension).map_err(|e| {
                    Error::ColumnNoConvergence {
                        column: c,
                        source: Box::new(e),
                    }
                })?;
            total += force;
        }
        out.push((strain, total));
    }
    Ok(out)
}

/// Minimum-energy bending of the array at a target mean strain.
///
/// The two mounts are rigid bars free to rotate; with total relative
/// rotation φ the column extensions are Δ_j = d + x_j·φ, where d is the
/// imposed mean extension and x_j the column offset. Minimizing
/// Σ ½·k_j·Δ_j² over φ is quadratic and closes to
/// φ = −d·Σk_j·x_j / Σk_j·x_j².
pub fn bend_equilibrium(
    cfg: &ArrayConfig,
    mask: &LockMask,
    target_strain: f64,
) -> Result<BendResult> {
    cfg.validate()?;
    mask.expect_dims(cfg.rows, cfg.cols)?;
    if !(target_strain.abs() < MAX_STRAIN) {
        return Err(Error::Domain(format!(
            "target_strain = {target_strain} outside (-{MAX_STRAIN}, {MAX_STRAIN})"
        )));
    }

    let d = target_strain * cfg.column_rest_length();
    let ks: Vec<f64> = (0..cfg.cols)
        .map(|c| column_stiffness(cfg, mask, c))
        .collect();
    let xs: Vec<f64> = (0..cfg.cols).map(|c| cfg.column_offset(c)).collect();

    let total_angle = if cfg.cols == 1 {
        0.0
    } else {
        // Sum mirrored column pairs first so symmetric stiffness
        // profiles cancel exactly instead of to rounding noise.
        let mut skx = 0.0;
        let mut skxx = 0.0;
        let n = cfg.cols;
        for j in 0..n / 2 {
            let m = n - 1 - j;
            skx += ks[j] * xs[j] + ks[m] * xs[m];
            skxx += ks[j] * xs[j] * xs[j] + ks[m] * xs[m] * xs[m];
        }
        if n % 2 == 1 {
            let mid = n / 2;
            skx += ks[mid] * xs[mid];
            skxx += ks[mid] * xs[mid] * xs[mid];
        }
        if skxx == 0.0 {
            return Err(Error::DegenerateGeometry(
                "all column offsets carry zero stiffness moment".into(),
            ));
        }
        -d * skx / skxx
    };

    let per_column_extension: Vec<f64> =
        xs.iter().map(|x| d + x * total_angle).collect();
    let energy = ks
        .iter()
        .zip(&per_column_extension)
        .map(|(k, dx)| 0.5 * k * dx * dx)
        .sum();

    Ok(BendResult {
        total_angle,
        per_column_extension,
        energy,
    })
}

/// Bending angle for each locked-column count, locking the leftmost
/// columns. Zero at count 0 and at count = cols, where the array is
/// uniform again.
pub fn bending_angle_sweep(
    cfg: &ArrayConfig,
    target_strain: f64,
    locked_column_counts: &[usize],
) -> Result<Vec<SweepPoint>> {
    let mut out = Vec::with_capacity(locked_column_counts.len());
    for &count in locked_column_counts {
        if count > cfg.cols {
            return Err(Error::Domain(format!(
                "locked column count {count} exceeds {} columns",
                cfg.cols
            )));
        }
        let mask = LockMask::leftmost_columns(cfg.rows, cfg.cols, count);
        let bend = bend_equilibrium(cfg, &mask, target_strain)?;
        out.push(SweepPoint {
            locked_count: count,
            total_angle: bend.total_angle,
            energy: bend.energy,
        });
    }
    Ok(out)
}
