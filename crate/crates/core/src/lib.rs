//! Modeling, fitting, and planning toolkit for electroadhesive auxetic
//! skins: rotating-squares sheets whose unit cells can be individually
//! locked by electrostatic friction.
//!
//! The crate is organized around the life of a design:
//!
//! - [`auc`] — torque balance of a single unit cell: strain-angle
//!   kinematics, hinge elasticity, electroadhesive friction, the
//!   equilibrium solver, force-strain curves, and stiffness extraction.
//! - [`dielectric`] — film properties and the built-in film catalog.
//! - [`trace`] — hysteresis traces and their delimited-text format.
//! - [`fitting`] — two-stage fit of Young's modulus and effective
//!   friction to measured traces, with goodness-of-fit reporting.
//! - [`array`] — series/parallel stiffness and minimum-energy bending
//!   of an m×n cell array under a lock mask.
//! - [`addressing`] — row-column energization planning and the
//!   demonstration lock patterns.
//! - [`power`] — per-cell electrical estimates and array cost.
//! - [`display`] — strain-limited circular-arc prediction of an
//!   inflated pouch constrained by the skin.
//!
//! All operations are pure functions of their inputs and safe to call
//! from any number of threads.

pub mod addressing;
pub mod array;
pub mod auc;
pub mod dielectric;
pub mod display;
pub mod error;
pub mod fitting;
pub mod mask;
pub mod power;
pub mod solve;
pub mod trace;

pub use addressing::AddressPlan;
pub use array::{ArrayConfig, BendResult, CellModel};
pub use auc::{AucGeometry, EquilibriumResult, ModelParams};
pub use dielectric::{Catalog, DielectricSpec};
pub use display::{ArcProfile, DisplayConfig, HeightMap};
pub use error::{Error, Result};
pub use fitting::{FitReport, ScalarFit};
pub use mask::LockMask;
pub use power::{CircuitModel, CostEstimate, ElectricalEstimate};
pub use trace::{Branch, HysteresisTrace, TraceMetadata, TraceSample};
