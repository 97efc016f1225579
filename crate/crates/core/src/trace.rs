//! Hysteresis traces: ordered (strain, force, voltage, branch) samples
//! from a pull test, with delimited-text serialization.
//!
//! File format: optional `# key=value` metadata comments, then the
//! header row `strain,force_N,voltage_V,branch`, then one sample per
//! row with 9 significant digits and branch spelled `loading` or
//! `unloading`.

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use crate::auc::MAX_STRAIN;
use crate::error::{Error, Result};

pub const TRACE_HEADER: &str = "strain,force_N,voltage_V,branch";

/// Which side of the hysteresis loop a sample belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Loading,
    Unloading,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Loading => "loading",
            Branch::Unloading => "unloading",
        })
    }
}

impl FromStr for Branch {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "loading" => Ok(Branch::Loading),
            "unloading" => Ok(Branch::Unloading),
            other => Err(format!("unknown branch `{other}` (expected loading|unloading)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceSample {
    /// Axial engineering strain, dimensionless.
    pub strain: f64,
    /// Measured or modeled pull force, N.
    pub force: f64,
    /// Potential difference applied while this sample was taken, V.
    pub voltage: f64,
    pub branch: Branch,
}

/// Provenance of a trace: which film, how many stacked sheets, and a
/// free-form geometry label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceMetadata {
    pub dielectric: String,
    pub layers: u32,
    pub geometry_id: String,
}

impl Default for TraceMetadata {
    fn default() -> Self {
        TraceMetadata {
            dielectric: "pvdf-hfp".into(),
            layers: 2,
            geometry_id: "default".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HysteresisTrace {
    pub samples: Vec<TraceSample>,
    pub metadata: TraceMetadata,
}

impl HysteresisTrace {
    pub fn new(samples: Vec<TraceSample>, metadata: TraceMetadata) -> HysteresisTrace {
        HysteresisTrace { samples, metadata }
    }

    /// True when every sample was taken with the supply off.
    pub fn is_unlocked(&self) -> bool {
        self.samples.iter().all(|s| s.voltage == 0.0)
    }

    /// True when any sample was taken with a voltage applied.
    pub fn is_locked(&self) -> bool {
        self.samples.iter().any(|s| s.voltage > 0.0)
    }

    /// Checks strain bounds, force finiteness, and that the branch flag
    /// switches at most once across the cycle.
    pub fn validate(&self) -> Result<()> {
        for (i, s) in self.samples.iter().enumerate() {
            if !(0.0..MAX_STRAIN).contains(&s.strain) {
                return Err(Error::Invariant(format!(
                    "sample {i}: strain {} outside [0, {MAX_STRAIN})",
                    s.strain
                )));
            }
            if !s.force.is_finite() {
                return Err(Error::Invariant(format!("sample {i}: force is not finite")));
            }
            if !(s.voltage >= 0.0) {
                return Err(Error::Invariant(format!(
                    "sample {i}: voltage {} must be >= 0",
                    s.voltage
                )));
            }
        }
        let transitions = self
            .samples
            .windows(2)
            .filter(|w| w[0].branch != w[1].branch)
            .count();
        if transitions > 1 {
            return Err(Error::Invariant(format!(
                "branch switches {transitions} times; a cycle allows at most one"
            )));
        }
        Ok(())
    }

    pub fn write<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "# dielectric={}", self.metadata.dielectric)?;
        writeln!(w, "# n_layers={}", self.metadata.layers)?;
        writeln!(w, "# geometry={}", self.metadata.geometry_id)?;
        writeln!(w, "{TRACE_HEADER}")?;
        for s in &self.samples {
            writeln!(
                w,
                "{:.8e},{:.8e},{:.8e},{}",
                s.strain, s.force, s.voltage, s.branch
            )?;
        }
        Ok(())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut buf = Vec::new();
        self.write(&mut buf)?;
        std::fs::write(path, buf)?;
        Ok(())
    }
}

/// Parses a trace file and checks all trace invariants.
pub fn load_trace(path: &Path) -> Result<HysteresisTrace> {
    let text = std::fs::read_to_string(path)?;
    parse_trace(&text, &path.display().to_string())
}

pub fn parse_trace(text: &str, source: &str) -> Result<HysteresisTrace> {
    let perr = |line: usize, msg: String| Error::Parse {
        path: source.to_string(),
        line,
        msg,
    };

    let mut metadata = TraceMetadata::default();
    let mut samples = Vec::new();
    let mut seen_header = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some((key, value)) = comment.split_once('=') {
                match key.trim() {
                    "dielectric" => metadata.dielectric = value.trim().to_string(),
                    "geometry" => metadata.geometry_id = value.trim().to_string(),
                    "n_layers" => {
                        metadata.layers = value.trim().parse().map_err(|_| {
                            perr(line_no, format!("bad n_layers value `{}`", value.trim()))
                        })?
                    }
                    _ => {}
                }
            }
            continue;
        }
        if !seen_header {
            if line != TRACE_HEADER {
                return Err(perr(
                    line_no,
                    format!("expected header `{TRACE_HEADER}`, found `{line}`"),
                ));
            }
            seen_header = true;
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(perr(
                line_no,
                format!("expected 4 comma-separated fields, found {}", fields.len()),
            ));
        }
        let num = |s: &str, what: &str| -> Result<f64> {
            s.trim()
                .parse::<f64>()
                .map_err(|_| perr(line_no, format!("bad {what} value `{}`", s.trim())))
        };
        samples.push(TraceSample {
            strain: num(fields[0], "strain")?,
            force: num(fields[1], "force")?,
            voltage: num(fields[2], "voltage")?,
            branch: fields[3]
                .trim()
                .parse()
                .map_err(|msg| perr(line_no, msg))?,
        });
    }

    if !seen_header {
        return Err(perr(1, format!("missing header `{TRACE_HEADER}`")));
    }
    let trace = HysteresisTrace { samples, metadata };
    trace.validate()?;
    Ok(trace)
}
