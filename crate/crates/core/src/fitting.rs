//! Two-stage parameter fitting against experimental hysteresis traces.
//!
//! Stage one fits the substrate Young's modulus E to the unlocked (0 V)
//! traces; stage two fits the effective friction coefficient µ_eff to
//! the locked traces' extra force, holding E fixed. Each stage is a
//! bracketed scalar least-squares problem, so both objectives are
//! quadratic in their parameter and the minimizer cannot wander.

use crate::auc::{branch_force, multilayer_extra_force, AucGeometry, ModelParams};
use crate::dielectric::DielectricSpec;
use crate::error::{Error, Result};
use crate::solve::brent_min;
use crate::trace::{Branch, HysteresisTrace};

/// Young's modulus search bracket, Pa. Covers plastic-film substrates
/// from soft polyolefins to stiff polyimides.
pub const E_BRACKET: (f64, f64) = (0.1e9, 20e9);

/// Friction coefficient search bracket, dimensionless.
pub const MU_BRACKET: (f64, f64) = (0.0, 1.0);

/// Relative tolerance of both scalar fits.
pub const FIT_TOLERANCE: f64 = 1e-4;

const PRESCAN_POINTS: usize = 50;

/// Result of one bracketed scalar fit.
#[derive(Debug, Clone)]
pub struct ScalarFit {
    /// Fitted parameter value.
    pub value: f64,
    /// Sum of squared force residuals at `value`, N².
    pub objective: f64,
    /// The minimizer ran into the lower bracket edge.
    pub at_lower_bound: bool,
    /// The minimizer ran into the upper bracket edge.
    pub at_upper_bound: bool,
    /// Every (parameter, objective) evaluation in call order, for run logs.
    pub history: Vec<(f64, f64)>,
}

/// Summary of a complete two-stage fit.
#[derive(Debug, Clone)]
pub struct FitReport {
    /// Fitted Young's modulus, Pa.
    pub youngs_modulus: f64,
    /// Fitted effective friction coefficient.
    pub friction: f64,
    /// Root mean squared force residual over all samples, N.
    pub rmse: f64,
    /// Total number of samples scored.
    pub n_points: usize,
    /// RMSE per input trace, N, in input order.
    pub per_trace_rmse: Vec<f64>,
}

/// Runs `brent_min` inside the basin located by a pre-scan of the
/// bracket, recording every objective evaluation.
///
/// `scan` maps a scan fraction in [0, 1] to a parameter value, letting
/// callers scan log-spaced (E) or linearly (µ).
fn scanned_fit(
    mut objective: impl FnMut(f64) -> f64,
    lo: f64,
    hi: f64,
    scan: impl Fn(f64) -> f64,
    rel_tol: f64,
) -> Result<ScalarFit> {
    let mut history: Vec<(f64, f64)> = Vec::new();

    let grid: Vec<f64> = (0..PRESCAN_POINTS)
        .map(|i| scan(i as f64 / (PRESCAN_POINTS - 1) as f64))
        .collect();
    let values: Vec<f64> = grid
        .iter()
        .map(|&x| {
            let v = objective(x);
            history.push((x, v));
            v
        })
        .collect();

    let best = values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .expect("pre-scan grid is non-empty");

    // A strict interior dip other than the global one means the scan saw
    // more than one basin.
    let local_minima = (1..PRESCAN_POINTS - 1)
        .filter(|&i| values[i] < values[i - 1] && values[i] < values[i + 1])
        .count();
    let interior_best = best > 0 && best < PRESCAN_POINTS - 1;
    if local_minima > 1 || (local_minima == 1 && !interior_best) {
        return Err(Error::BracketFailure { best: grid[best] });
    }

    let bracket_lo = grid[best.saturating_sub(1)];
    let bracket_hi = grid[(best + 1).min(PRESCAN_POINTS - 1)];
    let min = brent_min(
        |x| {
            let v = objective(x);
            history.push((x, v));
            v
        },
        bracket_lo,
        bracket_hi,
        rel_tol,
        200,
    );

    let edge = |x: f64, bound: f64| (x - bound).abs() <= 1e-3 * (hi - lo).abs();
    Ok(ScalarFit {
        value: min.x,
        objective: min.value,
        at_lower_bound: edge(min.x, lo),
        at_upper_bound: edge(min.x, hi),
        history,
    })
}

/// Fits Young's modulus to the unlocked traces.
///
/// The objective is the summed squared difference between observed
/// forces and the 0 V model forces at the same strains, minimized over
/// [`E_BRACKET`] after a 50-point log-spaced pre-scan locates the basin.
pub fn fit_youngs_modulus(traces: &[HysteresisTrace], geom: &AucGeometry) -> Result<ScalarFit> {
    let unlocked: Vec<&HysteresisTrace> = traces.iter().filter(|t| t.is_unlocked()).collect();
    if unlocked.is_empty() {
        return Err(Error::NoUnlockedData);
    }
    // Dielectric choice cannot matter at 0 V; any valid spec will do.
    let dielectric = crate::dielectric::Catalog::builtin()
        .films()
        .first()
        .expect("builtin catalog is non-empty")
        .clone();

    let points: Vec<(f64, f64)> = unlocked
        .iter()
        .flat_map(|t| t.samples.iter().map(|s| (s.strain, s.force)))
        .collect();
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }

    let objective = |e: f64| -> f64 {
        let params = ModelParams {
            youngs_modulus: e,
            voltage: 0.0,
            ..ModelParams::default()
        };
        points
            .iter()
            .map(|&(strain, force)| {
                let model = branch_force(strain, geom, &dielectric, &params, Branch::Loading)
                    .unwrap_or(f64::INFINITY);
                (force - model).powi(2)
            })
            .sum()
    };

    let (lo, hi) = E_BRACKET;
    let log_lo = lo.ln();
    let log_hi = hi.ln();
    scanned_fit(
        objective,
        lo,
        hi,
        |frac| (log_lo + frac * (log_hi - log_lo)).exp(),
        FIT_TOLERANCE,
    )
}

/// Fits the effective friction coefficient to the locked traces.
///
/// For every loading sample taken with voltage applied, the observed
/// extra force over the 0 V model (at the already-fitted E) is compared
/// with the stack friction prediction, and µ is minimized over [0, 1].
pub fn fit_mu_eff(
    traces: &[HysteresisTrace],
    youngs_modulus: f64,
    geom: &AucGeometry,
    dielectric: &DielectricSpec,
) -> Result<ScalarFit> {
    let locked: Vec<&HysteresisTrace> = traces.iter().filter(|t| t.is_locked()).collect();
    if locked.is_empty() {
        return Err(Error::NoLockedData);
    }

    let base = ModelParams {
        youngs_modulus,
        voltage: 0.0,
        ..ModelParams::default()
    };

    // (strain, layers, voltage, observed extra force)
    let mut points: Vec<(f64, u32, f64, f64)> = Vec::new();
    for trace in &locked {
        for s in &trace.samples {
            if s.voltage > 0.0 && s.branch == Branch::Loading {
                let cold = branch_force(s.strain, geom, dielectric, &base, Branch::Loading)?;
                points.push((s.strain, trace.metadata.layers, s.voltage, s.force - cold));
            }
        }
    }
    if points.is_empty() {
        return Err(Error::NoLockedData);
    }

    let objective = |mu: f64| -> f64 {
        let params = ModelParams {
            youngs_modulus,
            friction: mu,
            ..ModelParams::default()
        };
        points
            .iter()
            .map(|&(strain, layers, voltage, observed)| {
                let model =
                    multilayer_extra_force(layers, voltage, strain, geom, dielectric, &params)
                        .unwrap_or(f64::INFINITY);
                (observed - model).powi(2)
            })
            .sum()
    };

    let (lo, hi) = MU_BRACKET;
    scanned_fit(objective, lo, hi, |frac| lo + frac * (hi - lo), FIT_TOLERANCE)
}

/// Root mean squared force residual of the model against every sample
/// of every trace, N. Sample voltages and branch flags are honored, and
/// each trace's layer count overrides `params.layers`.
pub fn model_rmse(
    traces: &[HysteresisTrace],
    params: &ModelParams,
    geom: &AucGeometry,
    dielectric: &DielectricSpec,
) -> Result<f64> {
    let mut sum_sq = 0.0;
    let mut n = 0usize;
    for trace in traces {
        for s in &trace.samples {
            let sample_params = ModelParams {
                voltage: s.voltage,
                layers: trace.metadata.layers,
                ..params.clone()
            };
            let model = branch_force(s.strain, geom, dielectric, &sample_params, s.branch)?;
            sum_sq += (s.force - model).powi(2);
            n += 1;
        }
    }
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    Ok((sum_sq / n as f64).sqrt())
}

/// Two-stage fit plus goodness-of-fit bookkeeping.
pub fn fit_session(
    traces: &[HysteresisTrace],
    geom: &AucGeometry,
    dielectric: &DielectricSpec,
) -> Result<(FitReport, ScalarFit, ScalarFit)> {
    let e_fit = fit_youngs_modulus(traces, geom)?;
    let mu_fit = fit_mu_eff(traces, e_fit.value, geom, dielectric)?;
    let params = ModelParams {
        youngs_modulus: e_fit.value,
        friction: mu_fit.value,
        ..ModelParams::default()
    };
    let rmse = model_rmse(traces, &params, geom, dielectric)?;
    let per_trace_rmse = traces
        .iter()
        .map(|t| model_rmse(std::slice::from_ref(t), &params, geom, dielectric))
        .collect::<Result<Vec<f64>>>()?;
    let n_points = traces.iter().map(|t| t.samples.len()).sum();
    Ok((
        FitReport {
            youngs_modulus: e_fit.value,
            friction: mu_fit.value,
            rmse,
            n_points,
            per_trace_rmse,
        },
        e_fit,
        mu_fit,
    ))
}
