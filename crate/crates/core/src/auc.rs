//! Planar kinematic model of one electroadhesive auxetic unit cell.
//!
//! A square cell of side `a` rotates by a node angle θ when the sheet is
//! pulled; the corner hinges (length `c`, width `δ`, thickness `t`) bend
//! as Euler-Bernoulli beams, and an energized electrode pair adds a
//! frictional braking torque. Balancing the three torques about a square's
//! center,
//!
//! ```text
//! τ_f(θ) = f·a·(cos θ − sin θ)          applied force
//! τ_j(θ) = (2E/3)·(δ³t/c)·θ             four bent hinges
//! τ_ea   = μ·σ·a_ov³/6·(arsinh 1 + √2)  electroadhesive friction
//! σ      = (ε₀ε_r/2)·(V/d)²             electrostatic pressure
//! ```
//!
//! gives the equilibrium node angle. The model is quasi-static and
//! strictly planar: no out-of-plane motion, no buckling, no plasticity.

use std::f64::consts::{FRAC_PI_4, SQRT_2};

use crate::dielectric::{DielectricSpec, VACUUM_PERMITTIVITY};
use crate::error::{Error, Result};
use crate::solve::bisected_newton;
use crate::trace::{Branch, HysteresisTrace, TraceMetadata, TraceSample};

/// Node angle of a fully opened cell, rad. The moment arm of the applied
/// force vanishes here.
pub const MAX_NODE_ANGLE: f64 = FRAC_PI_4;

/// Largest axial strain the rotating-squares mechanism can reach, √2 − 1.
pub const MAX_STRAIN: f64 = SQRT_2 - 1.0;

/// Residual-torque tolerance of the equilibrium solver, N·m.
pub const EQUILIBRIUM_TOLERANCE: f64 = 1e-12;

/// Iteration cap of the equilibrium solver.
pub const EQUILIBRIUM_MAX_ITER: usize = 200;

/// In-plane and stack dimensions of one square unit cell.
///
/// The default matches the reference flexible-PCB cell: 17 mm squares
/// joined by 3 mm × 0.71 mm hinges on a 50 µm polyimide substrate, with
/// 180.34 mm² of electrode overlap (an equivalent square of side
/// 13.43 mm once wiring cutouts are subtracted).
#[derive(Debug, Clone, PartialEq)]
pub struct AucGeometry {
    /// Square side length a, m.
    pub side: f64,
    /// Hinge joint length c, m.
    pub hinge_length: f64,
    /// Hinge joint width δ, m.
    pub hinge_width: f64,
    /// Substrate thickness t, m.
    pub thickness: f64,
    /// Electrode overlap area A when unstretched, m².
    pub overlap_area: f64,
    /// Side a_ov of the equivalent square with the same overlap, m.
    pub overlap_side: f64,
    /// Unstretched axial span used to convert strain to displacement, m.
    ///
    /// Defaults to 2a + c: two squares plus one hinge along the pull
    /// axis, the mounting holes sitting at hinge midpoints.
    pub reference_length: f64,
}

impl Default for AucGeometry {
    fn default() -> Self {
        AucGeometry {
            side: 17e-3,
            hinge_length: 3e-3,
            hinge_width: 0.71e-3,
            thickness: 50e-6,
            overlap_area: 180.34e-6,
            overlap_side: 13.43e-3,
            reference_length: 37e-3,
        }
    }
}

impl AucGeometry {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            (self.side, "side"),
            (self.hinge_length, "hinge_length"),
            (self.hinge_width, "hinge_width"),
            (self.thickness, "thickness"),
            (self.overlap_area, "overlap_area"),
            (self.overlap_side, "overlap_side"),
            (self.reference_length, "reference_length"),
        ];
        for (v, name) in positive {
            if !(v > 0.0) {
                return Err(Error::Invariant(format!("geometry: {name} = {v} must be > 0")));
            }
        }
        if !(self.hinge_width < self.hinge_length && self.hinge_length < self.side) {
            return Err(Error::Invariant(format!(
                "geometry: need hinge_width < hinge_length < side, got {} / {} / {}",
                self.hinge_width, self.hinge_length, self.side
            )));
        }
        let mismatch =
            (self.overlap_side * self.overlap_side - self.overlap_area).abs() / self.overlap_area;
        if mismatch >= 0.05 {
            return Err(Error::Invariant(format!(
                "geometry: overlap_side^2 differs from overlap_area by {:.1}% (limit 5%)",
                mismatch * 100.0
            )));
        }
        Ok(())
    }
}

/// Material and drive parameters: everything fitted or assumed.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelParams {
    /// Substrate Young's modulus E, Pa.
    pub youngs_modulus: f64,
    /// Effective friction coefficient µ between layers, dimensionless.
    pub friction: f64,
    /// Number of stacked auxetic sheets (≥ 2). Friction acts on the
    /// `layers − 1` electroadhesive interfaces; only the bottom sheet is
    /// actively strained, so hinge stiffness counts once.
    pub layers: u32,
    /// Applied potential difference, V.
    pub voltage: f64,
}

impl Default for ModelParams {
    fn default() -> Self {
        ModelParams {
            youngs_modulus: 2.1e9,
            friction: 0.13,
            layers: 2,
            voltage: 0.0,
        }
    }
}

impl ModelParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.youngs_modulus > 0.0) {
            return Err(Error::Invariant(format!(
                "params: youngs_modulus = {} must be > 0",
                self.youngs_modulus
            )));
        }
        if !(self.friction >= 0.0) {
            return Err(Error::Invariant(format!(
                "params: friction = {} must be >= 0",
                self.friction
            )));
        }
        if self.layers < 2 {
            return Err(Error::Invariant(format!(
                "params: layers = {} must be >= 2",
                self.layers
            )));
        }
        if !(self.voltage >= 0.0) {
            return Err(Error::Invariant(format!(
                "params: voltage = {} must be >= 0",
                self.voltage
            )));
        }
        Ok(())
    }

    /// Number of energized sliding interfaces in the stack.
    pub fn interfaces(&self) -> f64 {
        (self.layers - 1) as f64
    }
}

/// Solution of the torque balance at one load point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquilibriumResult {
    /// Equilibrium node angle θ, rad.
    pub angle: f64,
    /// Axial engineering strain at that angle.
    pub strain: f64,
    /// Net torque left at `angle`, N·m. Below solver tolerance when
    /// `locked` is false; the held imbalance otherwise.
    pub residual_torque: f64,
    /// True when static friction (or a domain boundary) holds the cell
    /// at its previous angle instead of a torque-balance root.
    pub locked: bool,
}

fn check_angle(theta: f64, what: &str) -> Result<()> {
    if !(0.0..=MAX_NODE_ANGLE).contains(&theta) {
        return Err(Error::Domain(format!(
            "{what} = {theta} rad outside [0, pi/4]"
        )));
    }
    Ok(())
}

/// Axial strain of the mechanism at node angle θ: ε(θ) = cos θ + sin θ − 1.
///
/// Zero at θ = 0, √2 − 1 at θ = π/4, strictly increasing in between; its
/// derivative vanishes exactly where the applied-force moment arm does.
pub fn strain_from_angle(theta: f64) -> Result<f64> {
    check_angle(theta, "theta")?;
    Ok(theta.cos() + theta.sin() - 1.0)
}

/// Inverse of [`strain_from_angle`]: θ = asin((1 + ε)/√2) − π/4.
pub fn angle_from_strain(strain: f64) -> Result<f64> {
    if !(0.0..=MAX_STRAIN).contains(&strain) {
        return Err(Error::Domain(format!(
            "strain = {strain} outside [0, {MAX_STRAIN}]"
        )));
    }
    let theta = ((1.0 + strain) / SQRT_2).asin() - FRAC_PI_4;
    Ok(theta.clamp(0.0, MAX_NODE_ANGLE))
}

/// Torque about a square's center from an applied linear force:
/// τ_f = f·a·(cos θ − sin θ).
pub fn torque_applied(force: f64, theta: f64, geom: &AucGeometry) -> Result<f64> {
    if !(force >= 0.0) {
        return Err(Error::Domain(format!("force = {force} N must be >= 0")));
    }
    check_angle(theta, "theta")?;
    Ok(force * geom.side * (theta.cos() - theta.sin()))
}

/// Restoring torque of the four hinge beams: τ_j = (2E/3)·(δ³t/c)·θ.
pub fn hinge_torque(theta: f64, geom: &AucGeometry, params: &ModelParams) -> Result<f64> {
    if !(theta >= 0.0) {
        return Err(Error::Domain(format!("theta = {theta} rad must be >= 0")));
    }
    Ok(hinge_stiffness(geom, params) * theta)
}

/// dτ_j/dθ, N·m/rad. Each hinge bends by 2θ over length c; 4·EI/ρ with
/// I = δ³t/12 collapses to (2E/3)·δ³t/c.
pub fn hinge_stiffness(geom: &AucGeometry, params: &ModelParams) -> f64 {
    2.0 * params.youngs_modulus / 3.0 * geom.hinge_width.powi(3) * geom.thickness
        / geom.hinge_length
}

/// Electrostatic pressure σ = (ε₀ε_r/2)·(V/d)², Pa.
pub fn electrostatic_pressure(voltage: f64, dielectric: &DielectricSpec) -> f64 {
    VACUUM_PERMITTIVITY * dielectric.epsilon_r / 2.0 * (voltage / dielectric.thickness).powi(2)
}

/// Electroadhesive normal force and the pressure that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalForce {
    /// f_ea = σ·A, N.
    pub force: f64,
    /// σ, Pa.
    pub pressure: f64,
}

/// Normal force pulling two electrodes together across the dielectric.
pub fn ea_normal_force(
    voltage: f64,
    dielectric: &DielectricSpec,
    overlap_area: f64,
) -> Result<NormalForce> {
    if !(voltage >= 0.0) {
        return Err(Error::Domain(format!("voltage = {voltage} V must be >= 0")));
    }
    let pressure = electrostatic_pressure(voltage, dielectric);
    Ok(NormalForce {
        force: pressure * overlap_area,
        pressure,
    })
}

/// Frictional braking torque of one energized interface, integrating
/// µσr over the equivalent square overlap patch:
/// τ_ea = µ·σ·a_ov³/6·(arsinh 1 + √2).
pub fn ea_friction_torque(
    voltage: f64,
    dielectric: &DielectricSpec,
    friction: f64,
    overlap_side: f64,
) -> Result<f64> {
    if !(voltage >= 0.0) {
        return Err(Error::Domain(format!("voltage = {voltage} V must be >= 0")));
    }
    if !(friction >= 0.0) {
        return Err(Error::Domain(format!("friction = {friction} must be >= 0")));
    }
    // ∫∫ √(x²+y²) dx dy over a unit square centered at the origin.
    let radial_moment = (1.0_f64.asinh() + SQRT_2) / 6.0;
    let sigma = electrostatic_pressure(voltage, dielectric);
    Ok(friction * sigma * overlap_side.powi(3) * radial_moment)
}

/// Total friction torque across all energized interfaces of the stack.
pub fn stack_friction_torque(
    geom: &AucGeometry,
    dielectric: &DielectricSpec,
    params: &ModelParams,
) -> Result<f64> {
    Ok(params.interfaces()
        * ea_friction_torque(
            params.voltage,
            dielectric,
            params.friction,
            geom.overlap_side,
        )?)
}

/// Solves the torque balance for the equilibrium node angle.
///
/// Coulomb friction splits the problem in two: if the drive imbalance
/// |τ_f − τ_j| at `theta_prev` is within the static friction budget
/// τ_ea, the cell stays put (`locked = true`). Otherwise the cell slides
/// and the kinetic balance τ_f − τ_j − s·τ_ea = 0 is solved on the side
/// of `theta_prev` the imbalance pushes toward, with s the sign of the
/// impending rotation. The root is bracketed and polished to a residual
/// below [`EQUILIBRIUM_TOLERANCE`].
///
/// If no sign change exists inside [0, π/4] the nearer boundary is
/// returned with `locked = true` rather than failing; at θ = π/4 the
/// moment arm is zero and no finite force produces net torque.
pub fn solve_equilibrium(
    force: f64,
    geom: &AucGeometry,
    dielectric: &DielectricSpec,
    params: &ModelParams,
    theta_prev: f64,
) -> Result<EquilibriumResult> {
    if !(force >= 0.0) {
        return Err(Error::Domain(format!("force = {force} N must be >= 0")));
    }
    check_angle(theta_prev, "theta_prev")?;

    let tau_ea = stack_friction_torque(geom, dielectric, params)?;
    let k_j = hinge_stiffness(geom, params);
    let imbalance = |theta: f64| force * geom.side * (theta.cos() - theta.sin()) - k_j * theta;
    let d_imbalance = |theta: f64| -force * geom.side * (theta.sin() + theta.cos()) - k_j;

    let im_prev = imbalance(theta_prev);
    if im_prev.abs() <= tau_ea && tau_ea > 0.0 {
        return Ok(EquilibriumResult {
            angle: theta_prev,
            strain: strain_from_angle(theta_prev)?,
            residual_torque: im_prev,
            locked: true,
        });
    }
    if im_prev == 0.0 {
        // Frictionless and already balanced.
        return Ok(EquilibriumResult {
            angle: theta_prev,
            strain: strain_from_angle(theta_prev)?,
            residual_torque: 0.0,
            locked: false,
        });
    }

    let sliding_sign = im_prev.signum();
    let g = |theta: f64| imbalance(theta) - sliding_sign * tau_ea;
    let (lo, hi) = if sliding_sign > 0.0 {
        (theta_prev, MAX_NODE_ANGLE)
    } else {
        (0.0, theta_prev)
    };

    let g_lo = g(lo);
    let g_hi = g(hi);
    if (g_lo < 0.0) == (g_hi < 0.0) && g_lo.abs() > EQUILIBRIUM_TOLERANCE
        && g_hi.abs() > EQUILIBRIUM_TOLERANCE
    {
        // No root in the reachable interval: pin to the nearer boundary.
        let angle = if g_lo.abs() < g_hi.abs() { lo } else { hi };
        return Ok(EquilibriumResult {
            angle,
            strain: strain_from_angle(angle)?,
            residual_torque: g(angle),
            locked: true,
        });
    }

    let root = bisected_newton(g, d_imbalance, lo, hi, EQUILIBRIUM_TOLERANCE, EQUILIBRIUM_MAX_ITER)?;
    let angle = root.x.clamp(0.0, MAX_NODE_ANGLE);
    Ok(EquilibriumResult {
        angle,
        strain: strain_from_angle(angle)?,
        residual_torque: root.residual,
        locked: false,
    })
}

/// Largest applied force static friction can hold at node angle θ:
/// f_max = (τ_ea + τ_j(θ)) / (a·(cos θ − sin θ)).
///
/// Diverges as θ → π/4 (vanishing moment arm); reported as +∞ there.
pub fn max_hold_force(
    geom: &AucGeometry,
    dielectric: &DielectricSpec,
    params: &ModelParams,
    theta: f64,
) -> Result<f64> {
    check_angle(theta, "theta")?;
    if theta >= MAX_NODE_ANGLE {
        return Ok(f64::INFINITY);
    }
    let tau_ea = stack_friction_torque(geom, dielectric, params)?;
    let tau_j = hinge_torque(theta, geom, params)?;
    let arm = geom.side * (theta.cos() - theta.sin());
    if arm <= 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok((tau_ea + tau_j) / arm)
}

/// Quasi-static pull force at one strain on the given branch.
///
/// Inverting the torque balance, the loading branch pays the friction
/// torque and the unloading branch recovers it, floored at zero because
/// the pull rig cannot push:
/// f(ε) = (τ_j(θ) ± τ_ea) / (a·(cos θ − sin θ)) with θ = θ(ε).
pub fn branch_force(
    strain: f64,
    geom: &AucGeometry,
    dielectric: &DielectricSpec,
    params: &ModelParams,
    branch: Branch,
) -> Result<f64> {
    if !(0.0..MAX_STRAIN).contains(&strain) {
        return Err(Error::Domain(format!(
            "strain = {strain} outside [0, {MAX_STRAIN})"
        )));
    }
    let theta = angle_from_strain(strain)?;
    let arm = geom.side * (theta.cos() - theta.sin());
    let tau_j = hinge_torque(theta, geom, params)?;
    let tau_ea = stack_friction_torque(geom, dielectric, params)?;
    let force = match branch {
        Branch::Loading => (tau_j + tau_ea) / arm,
        Branch::Unloading => ((tau_j - tau_ea) / arm).max(0.0),
    };
    Ok(force)
}

/// Synthesizes one branch of a force-strain curve over a strain grid.
///
/// The grid must be sorted ascending and stay strictly below √2 − 1,
/// where the moment arm vanishes and the force diverges.
pub fn force_strain_curve(
    strain_grid: &[f64],
    geom: &AucGeometry,
    dielectric: &DielectricSpec,
    params: &ModelParams,
    branch: Branch,
) -> Result<HysteresisTrace> {
    if strain_grid.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Domain("strain grid must be sorted ascending".into()));
    }
    let mut samples = Vec::with_capacity(strain_grid.len());
    let grid: Vec<f64> = match branch {
        Branch::Loading => strain_grid.to_vec(),
        Branch::Unloading => strain_grid.iter().rev().copied().collect(),
    };
    for &strain in &grid {
        samples.push(TraceSample {
            strain,
            force: branch_force(strain, geom, dielectric, params, branch)?,
            voltage: params.voltage,
            branch,
        });
    }
    Ok(HysteresisTrace::new(
        samples,
        TraceMetadata {
            dielectric: dielectric.name.clone(),
            layers: params.layers,
            geometry_id: "default".into(),
        },
    ))
}

/// A full load/unload cycle: the loading branch over the grid followed
/// by the unloading branch back down it.
pub fn hysteresis_cycle(
    strain_grid: &[f64],
    geom: &AucGeometry,
    dielectric: &DielectricSpec,
    params: &ModelParams,
) -> Result<HysteresisTrace> {
    let mut cycle = force_strain_curve(strain_grid, geom, dielectric, params, Branch::Loading)?;
    let unloading = force_strain_curve(strain_grid, geom, dielectric, params, Branch::Unloading)?;
    cycle.samples.extend(unloading.samples);
    Ok(cycle)
}

/// Least-squares slope of force against displacement over the strain
/// window [0, `strain_window`], N/m. Displacement is strain times
/// `reference_length`.
pub fn linear_stiffness(
    trace: &HysteresisTrace,
    strain_window: f64,
    reference_length: f64,
) -> Result<f64> {
    if !(reference_length > 0.0) {
        return Err(Error::Domain(format!(
            "reference_length = {reference_length} m must be > 0"
        )));
    }
    if !(strain_window > 0.0) {
        return Err(Error::Domain(format!(
            "strain_window = {strain_window} must be > 0"
        )));
    }
    let pts: Vec<(f64, f64)> = trace
        .samples
        .iter()
        .filter(|s| s.strain <= strain_window)
        .map(|s| (s.strain * reference_length, s.force))
        .collect();
    if pts.len() < 3 {
        return Err(Error::InsufficientData {
            needed: 3,
            got: pts.len(),
        });
    }
    let n = pts.len() as f64;
    let x_mean = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let f_mean = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxf = 0.0;
    for (x, f) in &pts {
        sxx += (x - x_mean) * (x - x_mean);
        sxf += (x - x_mean) * (f - f_mean);
    }
    if sxx == 0.0 {
        return Err(Error::Invariant(
            "all samples in window share one displacement; slope undefined".into(),
        ));
    }
    Ok(sxf / sxx)
}

fn window_grid(strain_window: f64) -> Vec<f64> {
    const POINTS: usize = 51;
    (0..POINTS)
        .map(|i| strain_window * i as f64 / (POINTS - 1) as f64)
        .collect()
}

/// Locked-over-unlocked linear stiffness ratio over a strain window.
///
/// The locked numerator is the loading branch at the configured voltage;
/// the unlocked denominator is the same cell with the supply off. The
/// ratio is exactly 1 at 0 V and grows with the electrostatic pressure.
pub fn stiffness_ratio(
    geom: &AucGeometry,
    dielectric: &DielectricSpec,
    params: &ModelParams,
    strain_window: f64,
) -> Result<f64> {
    if !(strain_window > 0.0 && strain_window < MAX_STRAIN) {
        return Err(Error::Domain(format!(
            "strain_window = {strain_window} outside (0, {MAX_STRAIN})"
        )));
    }
    let grid = window_grid(strain_window);
    let locked = force_strain_curve(&grid, geom, dielectric, params, Branch::Loading)?;
    let unlocked_params = ModelParams {
        voltage: 0.0,
        ..params.clone()
    };
    let unlocked = force_strain_curve(&grid, geom, dielectric, &unlocked_params, Branch::Loading)?;
    let k_locked = linear_stiffness(&locked, strain_window, geom.reference_length)?;
    let k_unlocked = linear_stiffness(&unlocked, strain_window, geom.reference_length)?;
    Ok(k_locked / k_unlocked)
}

/// Extra pull force a locked n-sheet stack needs at one strain compared
/// to the unlocked stack: friction from `n_layers − 1` interfaces.
pub fn multilayer_extra_force(
    n_layers: u32,
    voltage: f64,
    strain: f64,
    geom: &AucGeometry,
    dielectric: &DielectricSpec,
    params: &ModelParams,
) -> Result<f64> {
    if n_layers < 2 {
        return Err(Error::Domain(format!(
            "n_layers = {n_layers} must be >= 2"
        )));
    }
    let stacked = ModelParams {
        layers: n_layers,
        voltage,
        ..params.clone()
    };
    let unlocked = ModelParams {
        voltage: 0.0,
        ..params.clone()
    };
    let locked_force = branch_force(strain, geom, dielectric, &stacked, Branch::Loading)?;
    let unlocked_force = branch_force(strain, geom, dielectric, &unlocked, Branch::Loading)?;
    Ok(locked_force - unlocked_force)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dielectric::Catalog;

    fn pvdf_hfp() -> DielectricSpec {
        Catalog::builtin().get("pvdf-hfp").unwrap().clone()
    }

    #[test]
    fn default_geometry_is_valid() {
        AucGeometry::default().validate().unwrap();
        ModelParams::default().validate().unwrap();
    }

    #[test]
    fn geometry_rejects_wide_hinge() {
        let geom = AucGeometry {
            hinge_width: 4e-3,
            ..AucGeometry::default()
        };
        assert!(matches!(geom.validate(), Err(Error::Invariant(_))));
    }

    #[test]
    fn geometry_rejects_inconsistent_overlap() {
        let geom = AucGeometry {
            overlap_side: 10e-3,
            ..AucGeometry::default()
        };
        assert!(matches!(geom.validate(), Err(Error::Invariant(_))));
    }

    #[test]
    fn strain_endpoints() {
        assert_eq!(strain_from_angle(0.0).unwrap(), 0.0);
        let at_max = strain_from_angle(MAX_NODE_ANGLE).unwrap();
        assert!((at_max - MAX_STRAIN).abs() < 1e-15);
    }

    #[test]
    fn strain_domain_errors() {
        assert!(matches!(strain_from_angle(-0.1), Err(Error::Domain(_))));
        assert!(matches!(strain_from_angle(1.0), Err(Error::Domain(_))));
        assert!(matches!(angle_from_strain(-0.01), Err(Error::Domain(_))));
        assert!(matches!(angle_from_strain(0.9), Err(Error::Domain(_))));
    }

    #[test]
    fn applied_torque_endpoints() {
        let geom = AucGeometry::default();
        let at_zero = torque_applied(1.0, 0.0, &geom).unwrap();
        assert!((at_zero - 0.017).abs() < 1e-15);
        let at_max = torque_applied(1.0, MAX_NODE_ANGLE, &geom).unwrap();
        assert!(at_max.abs() < 1e-17);
    }

    #[test]
    fn hinge_torque_is_zero_unbent_and_cubic_in_width() {
        let geom = AucGeometry::default();
        let params = ModelParams::default();
        assert_eq!(hinge_torque(0.0, &geom, &params).unwrap(), 0.0);

        let doubled = AucGeometry {
            hinge_width: 2.0 * geom.hinge_width,
            ..geom.clone()
        };
        let base = hinge_torque(0.1, &geom, &params).unwrap();
        let wide = hinge_torque(0.1, &doubled, &params).unwrap();
        assert!((wide / base - 8.0).abs() < 1e-12);
    }

    #[test]
    fn normal_force_vanishes_at_zero_volts() {
        let nf = ea_normal_force(0.0, &pvdf_hfp(), 180.34e-6).unwrap();
        assert_eq!(nf.force, 0.0);
        assert_eq!(nf.pressure, 0.0);
    }

    #[test]
    fn friction_torque_vanishes_at_zero_volts() {
        let tau = ea_friction_torque(0.0, &pvdf_hfp(), 0.13, 13.43e-3).unwrap();
        assert_eq!(tau, 0.0);
    }

    #[test]
    fn equilibrium_no_forces() {
        let geom = AucGeometry::default();
        let params = ModelParams::default();
        let r = solve_equilibrium(0.0, &geom, &pvdf_hfp(), &params, 0.0).unwrap();
        assert_eq!(r.angle, 0.0);
        assert_eq!(r.residual_torque, 0.0);
        assert!(!r.locked);
    }

    #[test]
    fn equilibrium_holds_below_hold_force() {
        let geom = AucGeometry::default();
        let params = ModelParams {
            voltage: 600.0,
            ..ModelParams::default()
        };
        // Hold budget at theta = 0 is ~1.468 N; 1 N stays put.
        let r = solve_equilibrium(1.0, &geom, &pvdf_hfp(), &params, 0.0).unwrap();
        assert_eq!(r.angle, 0.0);
        assert!(r.locked);
    }

    #[test]
    fn equilibrium_slides_above_hold_force() {
        let geom = AucGeometry::default();
        let params = ModelParams {
            voltage: 600.0,
            ..ModelParams::default()
        };
        let r = solve_equilibrium(2.0, &geom, &pvdf_hfp(), &params, 0.0).unwrap();
        assert!(!r.locked);
        assert!(r.angle > 0.0);
        assert!(r.residual_torque.abs() <= EQUILIBRIUM_TOLERANCE);
    }

    #[test]
    fn equilibrium_unloads_toward_smaller_angle() {
        let geom = AucGeometry::default();
        let params = ModelParams::default();
        let r = solve_equilibrium(0.0, &geom, &pvdf_hfp(), &params, 0.3).unwrap();
        assert!(!r.locked);
        assert!(r.angle < 1e-9, "hinges relax an unloaded frictionless cell");
    }

    #[test]
    fn hold_force_diverges_at_open_cell() {
        let geom = AucGeometry::default();
        let params = ModelParams::default();
        let f = max_hold_force(&geom, &pvdf_hfp(), &params, MAX_NODE_ANGLE).unwrap();
        assert!(f.is_infinite());
    }

    #[test]
    fn hold_force_zero_without_friction_or_bend() {
        let geom = AucGeometry::default();
        let params = ModelParams {
            voltage: 0.0,
            ..ModelParams::default()
        };
        let f = max_hold_force(&geom, &pvdf_hfp(), &params, 0.0).unwrap();
        assert_eq!(f, 0.0);
    }

    #[test]
    fn branches_coincide_without_voltage() {
        let geom = AucGeometry::default();
        let params = ModelParams::default();
        let grid: Vec<f64> = (0..20).map(|i| 0.002 * i as f64).collect();
        let load = force_strain_curve(&grid, &geom, &pvdf_hfp(), &params, Branch::Loading).unwrap();
        let unload =
            force_strain_curve(&grid, &geom, &pvdf_hfp(), &params, Branch::Unloading).unwrap();
        for (l, u) in load.samples.iter().zip(unload.samples.iter().rev()) {
            assert_eq!(l.force, u.force);
        }
    }

    #[test]
    fn loading_dominates_at_voltage() {
        let geom = AucGeometry::default();
        let params = ModelParams {
            voltage: 500.0,
            ..ModelParams::default()
        };
        let zero = ModelParams::default();
        let grid: Vec<f64> = (1..20).map(|i| 0.002 * i as f64).collect();
        for &eps in &grid {
            let hot = branch_force(eps, &geom, &pvdf_hfp(), &params, Branch::Loading).unwrap();
            let cold = branch_force(eps, &geom, &pvdf_hfp(), &zero, Branch::Loading).unwrap();
            assert!(hot >= cold);
        }
    }

    #[test]
    fn unsorted_grid_rejected() {
        let geom = AucGeometry::default();
        let params = ModelParams::default();
        let err = force_strain_curve(&[0.01, 0.005], &geom, &pvdf_hfp(), &params, Branch::Loading);
        assert!(matches!(err, Err(Error::Domain(_))));
    }

    #[test]
    fn linear_stiffness_recovers_exact_slope() {
        let samples: Vec<TraceSample> = (0..10)
            .map(|i| {
                let strain = 0.001 * i as f64;
                TraceSample {
                    strain,
                    force: 1500.0 * strain * 0.037,
                    voltage: 0.0,
                    branch: Branch::Loading,
                }
            })
            .collect();
        let trace = HysteresisTrace::new(samples, TraceMetadata::default());
        let k = linear_stiffness(&trace, 0.01, 0.037).unwrap();
        assert!((k - 1500.0).abs() < 1e-9);
    }

    #[test]
    fn linear_stiffness_constant_force_is_zero() {
        let samples: Vec<TraceSample> = (0..10)
            .map(|i| TraceSample {
                strain: 0.001 * i as f64,
                force: 2.5,
                voltage: 0.0,
                branch: Branch::Loading,
            })
            .collect();
        let trace = HysteresisTrace::new(samples, TraceMetadata::default());
        let k = linear_stiffness(&trace, 0.01, 0.037).unwrap();
        assert_eq!(k, 0.0);
    }

    #[test]
    fn linear_stiffness_needs_three_samples() {
        let samples = vec![
            TraceSample {
                strain: 0.0,
                force: 0.0,
                voltage: 0.0,
                branch: Branch::Loading,
            },
            TraceSample {
                strain: 0.001,
                force: 0.1,
                voltage: 0.0,
                branch: Branch::Loading,
            },
        ];
        let trace = HysteresisTrace::new(samples, TraceMetadata::default());
        assert!(matches!(
            linear_stiffness(&trace, 0.01, 0.037),
            Err(Error::InsufficientData { needed: 3, got: 2 })
        ));
    }

    #[test]
    fn stiffness_ratio_is_one_at_zero_volts() {
        let geom = AucGeometry::default();
        let params = ModelParams::default();
        let r = stiffness_ratio(&geom, &pvdf_hfp(), &params, 0.01).unwrap();
        assert_eq!(r, 1.0);
    }

    #[test]
    fn stiffness_ratio_grows_with_voltage() {
        let geom = AucGeometry::default();
        let lo = ModelParams {
            voltage: 300.0,
            ..ModelParams::default()
        };
        let hi = ModelParams {
            voltage: 600.0,
            ..ModelParams::default()
        };
        let r_lo = stiffness_ratio(&geom, &pvdf_hfp(), &lo, 0.01).unwrap();
        let r_hi = stiffness_ratio(&geom, &pvdf_hfp(), &hi, 0.01).unwrap();
        assert!(r_hi >= r_lo);
        assert!(r_lo >= 1.0);
    }

    #[test]
    fn multilayer_zero_volts_adds_nothing() {
        let geom = AucGeometry::default();
        let params = ModelParams::default();
        for n in [2, 3, 4] {
            let extra =
                multilayer_extra_force(n, 0.0, 0.03, &geom, &pvdf_hfp(), &params).unwrap();
            assert_eq!(extra, 0.0);
        }
    }

    #[test]
    fn multilayer_scales_with_interface_count() {
        let geom = AucGeometry::default();
        let params = ModelParams::default();
        let two = multilayer_extra_force(2, 500.0, 0.03, &geom, &pvdf_hfp(), &params).unwrap();
        let three = multilayer_extra_force(3, 500.0, 0.03, &geom, &pvdf_hfp(), &params).unwrap();
        let four = multilayer_extra_force(4, 500.0, 0.03, &geom, &pvdf_hfp(), &params).unwrap();
        assert!((three / two - 2.0).abs() < 1e-12);
        assert!((four / two - 3.0).abs() < 1e-12);
        assert!(two > 0.0);
    }
}
