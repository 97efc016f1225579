//! Inflated-shape prediction for a pouch under a partially locked skin.
//!
//! Each cross-section is idealized as circular arcs whose length is
//! capped by the skin's local strain limit: a clamped span S inflates
//! until its arc length reaches S·(1 + ε), giving the half-angle from
//! sin(θ_h)/θ_h = 1/(1 + ε). Pressure enters only as the reason the
//! skin reaches its limit; coupling below the limit is not modeled.

use crate::error::{Error, Result};
use crate::mask::LockMask;
use crate::solve::bisected_newton;

/// Residual tolerance of the arc half-angle solve.
pub const ARC_TOLERANCE: f64 = 1e-13;

/// Locked-cell strain limit that reproduces the measured 2.3× drop in
/// global curvature between the free and fully locked skins, given the
/// 0.05 free limit. Calibrated, not predicted:
/// [`calibrate_locked_strain_limit`] recomputes it from the arc model.
pub const CALIBRATED_LOCKED_LIMIT: f64 = 0.008475027232476451;

/// Default free-cell strain limit: the slippage-bounded operating
/// strain of the electroadhesive cells.
pub const DEFAULT_UNLOCKED_LIMIT: f64 = 0.05;

/// Measured unlocked-over-locked global curvature ratio the default
/// locked limit is calibrated against.
pub const DEFAULT_CURVATURE_RATIO_TARGET: f64 = 2.3;

/// Where a strain-limit value came from; carried into output metadata
/// so calibrated numbers are never mistaken for predictions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Provenance {
    /// Back-solved so the arc model reproduces a measured curvature
    /// ratio (the value is the target ratio).
    CalibratedToCurvatureRatio(f64),
    UserSpecified,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Provenance::CalibratedToCurvatureRatio(r) => {
                write!(f, "calibrated to curvature ratio {r}")
            }
            Provenance::UserSpecified => write!(f, "user-specified"),
        }
    }
}

/// Display geometry and the per-state strain limits.
#[derive(Debug, Clone, PartialEq)]
pub struct DisplayConfig {
    /// Clamped span of the square display along each axis, m.
    pub base_length: f64,
    /// Strain limit of free cells.
    pub strain_limit_unlocked: f64,
    /// Strain limit of locked cells.
    pub strain_limit_locked: f64,
    /// Provenance of `strain_limit_locked`.
    pub locked_limit_provenance: Provenance,
    /// Lock-mask grid dimensions.
    pub grid_rows: usize,
    pub grid_cols: usize,
    /// Height samples per cell per axis in [`heightmap`].
    pub samples_per_cell: usize,
}

impl Default for DisplayConfig {
    fn default() -> Self {
        DisplayConfig {
            base_length: 0.2,
            strain_limit_unlocked: DEFAULT_UNLOCKED_LIMIT,
            strain_limit_locked: CALIBRATED_LOCKED_LIMIT,
            locked_limit_provenance: Provenance::CalibratedToCurvatureRatio(
                DEFAULT_CURVATURE_RATIO_TARGET,
            ),
            grid_rows: 5,
            grid_cols: 5,
            samples_per_cell: 8,
        }
    }
}

impl DisplayConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.base_length > 0.0) {
            return Err(Error::Invariant(format!(
                "display: base_length = {} m must be > 0",
                self.base_length
            )));
        }
        let max = crate::auc::MAX_STRAIN;
        if !(0.0 <= self.strain_limit_locked
            && self.strain_limit_locked <= self.strain_limit_unlocked
            && self.strain_limit_unlocked < max)
        {
            return Err(Error::Invariant(format!(
                "display: need 0 <= locked limit <= unlocked limit < {max}, got {} / {}",
                self.strain_limit_locked, self.strain_limit_unlocked
            )));
        }
        if self.grid_rows == 0 || self.grid_cols == 0 {
            return Err(Error::Invariant("display: grid must be non-empty".into()));
        }
        if self.samples_per_cell == 0 {
            return Err(Error::Invariant(
                "display: samples_per_cell must be >= 1".into(),
            ));
        }
        Ok(())
    }
}

/// Circular-arc cross-section over one clamped span.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcProfile {
    /// 1/R, 1/m. Zero for a flat (unstrained) profile.
    pub curvature: f64,
    /// Height of the arc midpoint above the chord, m.
    pub apex_height: f64,
    /// Arc half-angle θ_h, rad.
    pub half_angle: f64,
    /// (x, z) samples from one clamped edge to the other.
    pub points: Vec<(f64, f64)>,
}

/// Half-angle of an arc whose length exceeds its chord by the factor
/// 1 + ε: the root of sin(θ)/θ = 1/(1 + ε) on (0, π).
fn arc_half_angle(strain_limit: f64) -> Result<f64> {
    if strain_limit == 0.0 {
        return Ok(0.0);
    }
    let target = 1.0 / (1.0 + strain_limit);
    let g = |x: f64| x.sin() / x - target;
    let dg = |x: f64| (x * x.cos() - x.sin()) / (x * x);
    let root = bisected_newton(g, dg, 1e-9, std::f64::consts::PI - 1e-9, ARC_TOLERANCE, 200)?;
    Ok(root.x)
}

/// Inflated cross-section of a span whose skin stretches at most
/// `strain_limit`. ε = 0 returns the flat profile.
pub fn arc_profile(span: f64, strain_limit: f64, n_points: usize) -> Result<ArcProfile> {
    if !(span > 0.0) {
        return Err(Error::Domain(format!("span = {span} m must be > 0")));
    }
    if !(strain_limit >= 0.0) {
        return Err(Error::Domain(format!(
            "strain_limit = {strain_limit} must be >= 0"
        )));
    }
    let n = n_points.max(2);
    let sample_x = |i: usize| span * i as f64 / (n - 1) as f64;

    if strain_limit == 0.0 {
        return Ok(ArcProfile {
            curvature: 0.0,
            apex_height: 0.0,
            half_angle: 0.0,
            points: (0..n).map(|i| (sample_x(i), 0.0)).collect(),
        });
    }

    let half_angle = arc_half_angle(strain_limit)?;
    let radius = span * (1.0 + strain_limit) / (2.0 * half_angle);
    let apex_height = radius * (1.0 - half_angle.cos());
    // Heights are referenced to the circle's value at the chord ends,
    // which pins the clamped edges to exactly zero.
    let half_span = 0.5 * span;
    let edge_drop = (radius * radius - half_span * half_span).sqrt();
    let points = (0..n)
        .map(|i| {
            let x = sample_x(i);
            let dx = x - half_span;
            let z = (radius * radius - dx * dx).sqrt() - edge_drop;
            (x, z.max(0.0))
        })
        .collect();
    Ok(ArcProfile {
        curvature: 1.0 / radius,
        apex_height,
        half_angle,
        points,
    })
}

/// Height samples over the display, row-major, including the clamped
/// boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct HeightMap {
    /// Samples along x (columns of the output grid).
    pub nx: usize,
    /// Samples along y (rows of the output grid).
    pub ny: usize,
    /// Physical side length, m.
    pub base_length: f64,
    /// Heights, m, row-major: `values[j * nx + i]` at (x_i, y_j).
    pub values: Vec<f64>,
}

impl HeightMap {
    pub fn x(&self, i: usize) -> f64 {
        self.base_length * i as f64 / (self.nx - 1) as f64
    }

    pub fn y(&self, j: usize) -> f64 {
        self.base_length * j as f64 / (self.ny - 1) as f64
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[j * self.nx + i]
    }

    pub fn max_height(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }
}

/// Piecewise-arc cross-section along one axis: contiguous runs of
/// equal lock state each inflate as their own arc, pinned to zero at
/// run boundaries, so height is continuous across them.
struct SectionProfile {
    /// (start, end, arc) per run, in span coordinates.
    runs: Vec<(f64, f64, RunArc)>,
}

struct RunArc {
    radius: f64,
    /// Circle height at the run's chord ends; subtracting it zeroes the
    /// profile exactly at run boundaries.
    edge_drop: f64,
}

impl SectionProfile {
    fn build(states: &[bool], cell_span: f64, cfg: &DisplayConfig) -> Result<SectionProfile> {
        let mut runs = Vec::new();
        let mut start = 0usize;
        while start < states.len() {
            let mut end = start + 1;
            while end < states.len() && states[end] == states[start] {
                end += 1;
            }
            let eps = if states[start] {
                cfg.strain_limit_locked
            } else {
                cfg.strain_limit_unlocked
            };
            let span = (end - start) as f64 * cell_span;
            let arc = if eps == 0.0 {
                RunArc {
                    radius: f64::INFINITY,
                    edge_drop: 0.0,
                }
            } else {
                let half = arc_half_angle(eps)?;
                let radius = span * (1.0 + eps) / (2.0 * half);
                let half_span = 0.5 * span;
                RunArc {
                    radius,
                    edge_drop: (radius * radius - half_span * half_span).sqrt(),
                }
            };
            runs.push((start as f64 * cell_span, end as f64 * cell_span, arc));
            start = end;
        }
        Ok(SectionProfile { runs })
    }

    fn height(&self, pos: f64) -> f64 {
        for (start, end, arc) in &self.runs {
            if pos >= *start && pos <= *end {
                if !arc.radius.is_finite() {
                    return 0.0;
                }
                let dx = pos - 0.5 * (start + end);
                let under = arc.radius * arc.radius - dx * dx;
                if under <= 0.0 {
                    return 0.0;
                }
                return (under.sqrt() - arc.edge_drop).max(0.0);
            }
        }
        0.0
    }
}

/// Predicted height field of the display under a lock mask.
///
/// Every mask row gives an x-axis cross-section, every mask column a
/// y-axis one; a strain limit in either direction caps local height, so
/// each sample takes the pointwise minimum of the two sections through
/// it. The clamped boundary is exactly zero.
///
/// Unlike [`DisplayConfig::validate`], the solver itself does not care
/// which of the two limits is larger, only that both are reachable arc
/// strains; swapping the limits and complementing the mask is a valid
/// call that leaves the field unchanged.
pub fn heightmap(cfg: &DisplayConfig, mask: &LockMask) -> Result<HeightMap> {
    for (limit, name) in [
        (cfg.strain_limit_unlocked, "strain_limit_unlocked"),
        (cfg.strain_limit_locked, "strain_limit_locked"),
    ] {
        if !(0.0..crate::auc::MAX_STRAIN).contains(&limit) {
            return Err(Error::Invariant(format!(
                "display: {name} = {limit} outside [0, {})",
                crate::auc::MAX_STRAIN
            )));
        }
    }
    if !(cfg.base_length > 0.0) {
        return Err(Error::Invariant(format!(
            "display: base_length = {} m must be > 0",
            cfg.base_length
        )));
    }
    if cfg.samples_per_cell == 0 {
        return Err(Error::Invariant(
            "display: samples_per_cell must be >= 1".into(),
        ));
    }
    mask.expect_dims(cfg.grid_rows, cfg.grid_cols)?;

    let cell_w = cfg.base_length / cfg.grid_cols as f64;
    let cell_h = cfg.base_length / cfg.grid_rows as f64;

    let row_sections: Vec<SectionProfile> = (0..cfg.grid_rows)
        .map(|r| SectionProfile::build(&mask.row(r), cell_w, cfg))
        .collect::<Result<_>>()?;
    let col_sections: Vec<SectionProfile> = (0..cfg.grid_cols)
        .map(|c| SectionProfile::build(&mask.column(c), cell_h, cfg))
        .collect::<Result<_>>()?;

    let nx = cfg.grid_cols * cfg.samples_per_cell + 1;
    let ny = cfg.grid_rows * cfg.samples_per_cell + 1;
    let mut values = vec![0.0; nx * ny];
    for j in 1..ny - 1 {
        let y = cfg.base_length * j as f64 / (ny - 1) as f64;
        let row_band = ((y / cell_h) as usize).min(cfg.grid_rows - 1);
        for i in 1..nx - 1 {
            let x = cfg.base_length * i as f64 / (nx - 1) as f64;
            let col_band = ((x / cell_w) as usize).min(cfg.grid_cols - 1);
            let h_along_x = row_sections[row_band].height(x);
            let h_along_y = col_sections[col_band].height(y);
            values[j * nx + i] = h_along_x.min(h_along_y);
        }
    }
    Ok(HeightMap {
        nx,
        ny,
        base_length: cfg.base_length,
        values,
    })
}

/// The horizontal center cross-section of the height field: (x, height)
/// along y = base/2.
pub fn center_profile(cfg: &DisplayConfig, mask: &LockMask) -> Result<Vec<(f64, f64)>> {
    let map = heightmap(cfg, mask)?;
    let j = (map.ny - 1) / 2;
    Ok((0..map.nx).map(|i| (map.x(i), map.get(i, j))).collect())
}

/// Best-fit circle curvature comparison between two lock states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureRatio {
    /// κ_a / κ_b of the center cross-sections. +∞ when the second
    /// profile is flat.
    pub ratio: f64,
    /// Set when either profile was flat and the ratio is a sentinel.
    pub degenerate: bool,
    pub curvature_a: f64,
    pub curvature_b: f64,
}

/// Ratio of best-fit global curvatures of the two masks' center
/// cross-sections.
pub fn curvature_ratio(
    cfg: &DisplayConfig,
    mask_a: &LockMask,
    mask_b: &LockMask,
) -> Result<CurvatureRatio> {
    let curvature_a = fitted_curvature(&center_profile(cfg, mask_a)?, cfg.base_length);
    let curvature_b = fitted_curvature(&center_profile(cfg, mask_b)?, cfg.base_length);
    let flat_a = curvature_a == 0.0;
    let flat_b = curvature_b == 0.0;
    let ratio = if flat_b {
        f64::INFINITY
    } else {
        curvature_a / curvature_b
    };
    Ok(CurvatureRatio {
        ratio,
        degenerate: flat_a || flat_b,
        curvature_a,
        curvature_b,
    })
}

/// Least-squares circle curvature through a profile (algebraic fit).
/// Returns 0 for profiles too flat to carry a circle.
fn fitted_curvature(profile: &[(f64, f64)], scale: f64) -> f64 {
    let peak = profile.iter().map(|p| p.1).fold(0.0, f64::max);
    if peak < 1e-12 * scale {
        return 0.0;
    }
    // Fit x² + z² + D·x + E·z + F = 0 by linear least squares.
    let n = profile.len() as f64;
    let (mut sx, mut sz, mut sxx, mut sxz, mut szz) = (0.0, 0.0, 0.0, 0.0, 0.0);
    let (mut sr, mut srx, mut srz) = (0.0, 0.0, 0.0);
    for &(x, z) in profile {
        let r = x * x + z * z;
        sx += x;
        sz += z;
        sxx += x * x;
        sxz += x * z;
        szz += z * z;
        sr += r;
        srx += r * x;
        srz += r * z;
    }
    let a = [[sxx, sxz, sx], [sxz, szz, sz], [sx, sz, n]];
    let b = [-srx, -srz, -sr];
    match solve3(a, b) {
        Some([d, e, f]) => {
            let r_sq = 0.25 * (d * d + e * e) - f;
            if r_sq > 0.0 {
                1.0 / r_sq.sqrt()
            } else {
                0.0
            }
        }
        None => 0.0,
    }
}

fn solve3(mut a: [[f64; 3]; 3], mut b: [f64; 3]) -> Option<[f64; 3]> {
    for col in 0..3 {
        let pivot = (col..3).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[pivot][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in (col + 1)..3 {
            let factor = a[row][col] / a[col][col];
            for k in col..3 {
                a[row][k] -= factor * a[col][k];
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = [0.0; 3];
    for row in (0..3).rev() {
        let mut acc = b[row];
        for k in (row + 1)..3 {
            acc -= a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    Some(x)
}

/// Back-solves the locked strain limit so the arc model's free/locked
/// curvature ratio equals `target_ratio`. The ratio is independent of
/// span, so the solve works on unit span.
pub fn calibrate_locked_strain_limit(unlocked_limit: f64, target_ratio: f64) -> Result<f64> {
    if !(unlocked_limit > 0.0 && unlocked_limit < crate::auc::MAX_STRAIN) {
        return Err(Error::Domain(format!(
            "unlocked_limit = {unlocked_limit} outside (0, {})",
            crate::auc::MAX_STRAIN
        )));
    }
    if !(target_ratio > 1.0) {
        return Err(Error::Domain(format!(
            "target_ratio = {target_ratio} must exceed 1"
        )));
    }
    let kappa_unit = |eps: f64| -> Result<f64> {
        Ok(2.0 * arc_half_angle(eps)? / (1.0 + eps))
    };
    let target = kappa_unit(unlocked_limit)? / target_ratio;

    // Bisection on the monotone curvature-vs-limit map.
    let mut lo = 1e-12;
    let mut hi = unlocked_limit;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if kappa_unit(mid)? < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Diagnostic slope asymmetry of a profile: max |dz/dx| over the left
/// half divided by max |dz/dx| over the right half.
pub fn slope_change_ratio(profile: &[(f64, f64)]) -> f64 {
    if profile.len() < 3 {
        return 1.0;
    }
    let mid = profile.len() / 2;
    let max_slope = |pts: &[(f64, f64)]| -> f64 {
        pts.windows(2)
            .map(|w| {
                let dx = w[1].0 - w[0].0;
                if dx == 0.0 {
                    0.0
                } else {
                    ((w[1].1 - w[0].1) / dx).abs()
                }
            })
            .fold(0.0, f64::max)
    };
    let left = max_slope(&profile[..=mid]);
    let right = max_slope(&profile[mid..]);
    if right == 0.0 {
        if left == 0.0 {
            1.0
        } else {
            f64::INFINITY
        }
    } else {
        left / right
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_limit_gives_flat_profile() {
        let arc = arc_profile(0.2, 0.0, 11).unwrap();
        assert_eq!(arc.curvature, 0.0);
        assert_eq!(arc.apex_height, 0.0);
        assert!(arc.points.iter().all(|p| p.1 == 0.0));
    }

    #[test]
    fn arc_chord_and_length_invariants() {
        let span = 0.2;
        let eps = 0.05;
        let arc = arc_profile(span, eps, 101).unwrap();
        let radius = 1.0 / arc.curvature;
        let chord = 2.0 * radius * arc.half_angle.sin();
        assert!((chord - span).abs() < 1e-9);
        let arc_length = 2.0 * radius * arc.half_angle;
        assert!((arc_length - span * (1.0 + eps)).abs() < 1e-9);
    }

    #[test]
    fn arc_residual_below_tolerance() {
        for eps in [0.001, 0.01, 0.05, 0.2, 0.4] {
            let arc = arc_profile(0.2, eps, 3).unwrap();
            let residual = arc.half_angle.sin() / arc.half_angle - 1.0 / (1.0 + eps);
            assert!(residual.abs() < 1e-12, "eps {eps}: residual {residual:e}");
        }
    }

    #[test]
    fn taller_with_more_strain() {
        let lo = arc_profile(0.2, 0.05, 3).unwrap();
        let hi = arc_profile(0.2, 0.10, 3).unwrap();
        assert!(hi.apex_height > lo.apex_height);
        assert!(hi.curvature > lo.curvature);
    }

    #[test]
    fn fully_locked_zero_limit_is_flat() {
        let cfg = DisplayConfig {
            strain_limit_locked: 0.0,
            ..DisplayConfig::default()
        };
        let map = heightmap(&cfg, &LockMask::full(5, 5)).unwrap();
        assert_eq!(map.max_height(), 0.0);
    }

    #[test]
    fn free_dome_is_rotation_symmetric() {
        let cfg = DisplayConfig::default();
        let map = heightmap(&cfg, &LockMask::new(5, 5)).unwrap();
        assert_eq!(map.nx, map.ny);
        let n = map.nx;
        for j in 0..n {
            for i in 0..n {
                let rotated = map.get(n - 1 - j, i);
                assert!(
                    (map.get(i, j) - rotated).abs() < 1e-12,
                    "rotation symmetry at ({i}, {j})"
                );
            }
        }
    }

    #[test]
    fn boundary_is_clamped_to_zero() {
        let cfg = DisplayConfig::default();
        let map = heightmap(&cfg, &crate::addressing::preset("right-40").unwrap()).unwrap();
        for i in 0..map.nx {
            assert_eq!(map.get(i, 0), 0.0);
            assert_eq!(map.get(i, map.ny - 1), 0.0);
        }
        for j in 0..map.ny {
            assert_eq!(map.get(0, j), 0.0);
            assert_eq!(map.get(map.nx - 1, j), 0.0);
        }
        assert!(map.values.iter().all(|&h| h >= 0.0));
    }

    #[test]
    fn right_locked_peak_sits_left_of_center() {
        let cfg = DisplayConfig::default();
        let mask = crate::addressing::preset("right-40").unwrap();
        let profile = center_profile(&cfg, &mask).unwrap();
        let (peak_x, _) = profile
            .iter()
            .copied()
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        assert!(
            peak_x < 0.5 * cfg.base_length,
            "peak at {peak_x} should sit left of center"
        );
    }

    #[test]
    fn identical_masks_ratio_one() {
        let cfg = DisplayConfig::default();
        let mask = crate::addressing::preset("right-40").unwrap();
        let r = curvature_ratio(&cfg, &mask, &mask).unwrap();
        assert!(!r.degenerate);
        assert!((r.ratio - 1.0).abs() < 1e-12);
    }

    #[test]
    fn flat_reference_is_degenerate() {
        let cfg = DisplayConfig {
            strain_limit_locked: 0.0,
            ..DisplayConfig::default()
        };
        let r = curvature_ratio(&cfg, &LockMask::new(5, 5), &LockMask::full(5, 5)).unwrap();
        assert!(r.degenerate);
        assert!(r.ratio.is_infinite());
    }

    #[test]
    fn calibration_reproduces_frozen_default() {
        let eps = calibrate_locked_strain_limit(
            DEFAULT_UNLOCKED_LIMIT,
            DEFAULT_CURVATURE_RATIO_TARGET,
        )
        .unwrap();
        assert!(
            (eps - CALIBRATED_LOCKED_LIMIT).abs() < 1e-12,
            "calibrated {eps} vs frozen {CALIBRATED_LOCKED_LIMIT}"
        );
    }

    #[test]
    fn ratio_invariant_under_base_scaling() {
        let base = DisplayConfig::default();
        let scaled = DisplayConfig {
            base_length: 3.7 * base.base_length,
            ..base.clone()
        };
        let free = LockMask::new(5, 5);
        let locked = LockMask::full(5, 5);
        let a = curvature_ratio(&base, &free, &locked).unwrap();
        let b = curvature_ratio(&scaled, &free, &locked).unwrap();
        assert!((a.ratio - b.ratio).abs() < 1e-9 * a.ratio);
    }

    #[test]
    fn swap_limits_and_complement_leave_heights_unchanged() {
        let cfg = DisplayConfig {
            strain_limit_unlocked: 0.05,
            strain_limit_locked: 0.02,
            locked_limit_provenance: Provenance::UserSpecified,
            ..DisplayConfig::default()
        };
        let mask = crate::addressing::preset("top-right-36").unwrap();
        let swapped = DisplayConfig {
            strain_limit_unlocked: 0.02,
            strain_limit_locked: 0.05,
            ..cfg.clone()
        };
        // Swapping both the limits and the lock state leaves every
        // cell's effective limit alone, so the field is identical.
        let a = heightmap(&cfg, &mask).unwrap();
        let b = heightmap(&swapped, &mask.complement()).unwrap();
        assert_eq!(a.values, b.values);
    }

    #[test]
    fn mirrored_mask_mirrors_heights() {
        let cfg = DisplayConfig::default();
        let mask = crate::addressing::preset("right-40").unwrap();
        let a = heightmap(&cfg, &mask).unwrap();
        let b = heightmap(&cfg, &mask.mirror_columns()).unwrap();
        for j in 0..a.ny {
            for i in 0..a.nx {
                assert!(
                    (a.get(i, j) - b.get(a.nx - 1 - i, j)).abs() < 1e-12,
                    "mirror at ({i}, {j})"
                );
            }
        }
    }
}
