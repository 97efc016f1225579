//! Per-cell electrical behavior and array cost from the drive circuit.
//!
//! Each cell looks like a capacitor charged through the converter's
//! current-limit resistor and two thin-film electrode resistances in
//! series; a large per-cell leakage resistance sets the steady hold
//! power.

use crate::dielectric::DielectricSpec;
use crate::error::{Error, Result};

/// Lumped circuit model of one driven cell plus its switch stage.
#[derive(Debug, Clone, PartialEq)]
pub struct CircuitModel {
    /// Electrode-pair capacitance, F.
    pub cell_capacitance: f64,
    /// One electrode's series resistance, Ω (two appear in series).
    pub cell_resistance: f64,
    /// Supply-side current-limit resistor, Ω.
    pub current_limit_resistance: f64,
    /// Series resistor protecting the logic input, Ω.
    pub input_resistance: f64,
    /// Lowest voltage the converter can produce, V.
    pub supply_min: f64,
    /// Highest voltage the converter can produce, V.
    pub supply_max: f64,
    /// Per-cell DC leakage resistance, Ω.
    pub leakage_resistance: f64,
    /// Measured ceiling on logic-stage current per cell, A. Stored as a
    /// configuration constant, not derived from the transistor model.
    pub logic_current_per_cell: f64,
}

impl Default for CircuitModel {
    fn default() -> Self {
        CircuitModel {
            cell_capacitance: 8.3e-9,
            cell_resistance: 1.2,
            current_limit_resistance: 10e6,
            input_resistance: 1e3,
            supply_min: 200.0,
            supply_max: 600.0,
            leakage_resistance: crate::dielectric::DEFAULT_LEAKAGE_RESISTANCE,
            logic_current_per_cell: 72.2e-6,
        }
    }
}

impl CircuitModel {
    /// Applies the dielectric's per-cell leakage resistance.
    pub fn with_dielectric(self, dielectric: &DielectricSpec) -> CircuitModel {
        CircuitModel {
            leakage_resistance: dielectric.leakage_resistance,
            ..self
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            (self.cell_capacitance, "cell_capacitance"),
            (self.cell_resistance, "cell_resistance"),
            (self.current_limit_resistance, "current_limit_resistance"),
            (self.input_resistance, "input_resistance"),
            (self.supply_min, "supply_min"),
            (self.supply_max, "supply_max"),
            (self.leakage_resistance, "leakage_resistance"),
            (self.logic_current_per_cell, "logic_current_per_cell"),
        ];
        for (v, name) in positive {
            if !(v > 0.0) {
                return Err(Error::Invariant(format!("circuit: {name} = {v} must be > 0")));
            }
        }
        if self.supply_min > self.supply_max {
            return Err(Error::Invariant(format!(
                "circuit: supply_min {} exceeds supply_max {}",
                self.supply_min, self.supply_max
            )));
        }
        Ok(())
    }
}

/// Electrical figures for `n` locked cells at one drive voltage.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElectricalEstimate {
    /// Steady leakage dissipation per cell, W: V²/R_leak.
    pub leak_power_per_cell: f64,
    /// Configured logic-current ceiling per cell, A.
    pub logic_current_per_cell: f64,
    /// n × (leak power + V × logic current), W.
    pub total_power: f64,
    /// RC charge time constant, s: (R_limit + 2·R_cell)·C.
    pub charge_time_constant: f64,
}

/// Power, current, and charging estimates for a locked subset.
pub fn electrical_estimate(
    model: &CircuitModel,
    voltage: f64,
    n_cells_locked: usize,
) -> Result<ElectricalEstimate> {
    model.validate()?;
    if !(voltage >= model.supply_min && voltage <= model.supply_max) {
        return Err(Error::VoltageOutOfRange {
            voltage,
            min: model.supply_min,
            max: model.supply_max,
        });
    }
    let leak_power_per_cell = voltage * voltage / model.leakage_resistance;
    let charge_time_constant =
        (model.current_limit_resistance + 2.0 * model.cell_resistance) * model.cell_capacitance;
    let per_cell = leak_power_per_cell + voltage * model.logic_current_per_cell;
    Ok(ElectricalEstimate {
        leak_power_per_cell,
        logic_current_per_cell: model.logic_current_per_cell,
        total_power: n_cells_locked as f64 * per_cell,
        charge_time_constant,
    })
}

/// Per-cell overhead that lands the 10 µm high-permittivity film at
/// 0.88 USD/cell all-in (flexible PCB plus high-voltage logic at
/// 100-board quantities): 0.88 − 0.0059 USD/cm² × (1.7 cm)².
pub const DEFAULT_CELL_OVERHEAD_USD: f64 = 0.862949;

/// Bill-of-materials estimate for one array.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostEstimate {
    pub cells: usize,
    /// Dielectric film cost per cell, USD.
    pub dielectric_per_cell: f64,
    /// Everything-else cost per cell, USD.
    pub overhead_per_cell: f64,
    /// Total per-cell cost, USD.
    pub per_cell: f64,
    /// Whole-array cost, USD.
    pub total: f64,
}

/// Array cost: per cell, the film priced over the square cell area plus
/// a flat overhead; totals scale by cell count.
pub fn cost_estimate(
    rows: usize,
    cols: usize,
    cell_side: f64,
    dielectric: &DielectricSpec,
    per_cell_overhead: f64,
) -> Result<CostEstimate> {
    if !(cell_side > 0.0) {
        return Err(Error::Domain(format!(
            "cell_side = {cell_side} m must be > 0"
        )));
    }
    if !(per_cell_overhead >= 0.0) {
        return Err(Error::Domain(format!(
            "per_cell_overhead = {per_cell_overhead} USD must be >= 0"
        )));
    }
    let cells = rows * cols;
    let side_cm = cell_side * 100.0;
    let dielectric_per_cell = dielectric.cost_per_area * side_cm * side_cm;
    let per_cell = dielectric_per_cell + per_cell_overhead;
    Ok(CostEstimate {
        cells,
        dielectric_per_cell,
        overhead_per_cell: per_cell_overhead,
        per_cell,
        total: per_cell * cells as f64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dielectric::Catalog;

    #[test]
    fn charge_time_constant_from_defaults() {
        let est = electrical_estimate(&CircuitModel::default(), 600.0, 25).unwrap();
        assert!((est.charge_time_constant - 0.083000019_92).abs() < 1e-12);
    }

    #[test]
    fn leak_power_reproduces_hold_budget() {
        let est = electrical_estimate(&CircuitModel::default(), 600.0, 1).unwrap();
        assert!((est.leak_power_per_cell - 50e-6).abs() < 1e-18);
    }

    #[test]
    fn zero_cells_draw_nothing() {
        let est = electrical_estimate(&CircuitModel::default(), 400.0, 0).unwrap();
        assert_eq!(est.total_power, 0.0);
    }

    #[test]
    fn out_of_range_voltage_rejected() {
        let model = CircuitModel::default();
        assert!(matches!(
            electrical_estimate(&model, 700.0, 1),
            Err(Error::VoltageOutOfRange { .. })
        ));
        assert!(matches!(
            electrical_estimate(&model, 100.0, 1),
            Err(Error::VoltageOutOfRange { .. })
        ));
    }

    #[test]
    fn time_constant_ignores_voltage() {
        let model = CircuitModel::default();
        let a = electrical_estimate(&model, 200.0, 1).unwrap();
        let b = electrical_estimate(&model, 600.0, 1).unwrap();
        assert_eq!(a.charge_time_constant, b.charge_time_constant);
    }

    #[test]
    fn mylar_dielectric_share() {
        let cat = Catalog::builtin();
        let est = cost_estimate(5, 5, 17e-3, cat.get("mylar").unwrap(), 0.0).unwrap();
        assert!((est.dielectric_per_cell - 0.0018785).abs() < 1e-12);
        assert_eq!(est.per_cell, est.dielectric_per_cell);
    }

    #[test]
    fn free_parts_cost_nothing() {
        let film = DielectricSpec {
            name: "free".into(),
            epsilon_r: 3.0,
            thickness: 10e-6,
            cost_per_area: 0.0,
            leakage_resistance: 7.2e9,
        };
        let est = cost_estimate(5, 5, 17e-3, &film, 0.0).unwrap();
        assert_eq!(est.total, 0.0);
    }

    #[test]
    fn calibrated_overhead_hits_published_cell_cost() {
        let cat = Catalog::builtin();
        let est = cost_estimate(
            5,
            5,
            17e-3,
            cat.get("pvdf-hfp").unwrap(),
            DEFAULT_CELL_OVERHEAD_USD,
        )
        .unwrap();
        assert!((est.per_cell - 0.88).abs() < 1e-12);
        assert!((est.total - 22.0).abs() < 1e-10);
    }
}
