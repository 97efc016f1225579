use thiserror::Error;

/// Errors surfaced by the modeling, fitting, and planning operations.
#[derive(Debug, Error)]
pub enum Error {
    /// An input fell outside the mathematical domain of an operation.
    #[error("domain: {0}")]
    Domain(String),

    /// A structural invariant on a domain type failed to hold.
    #[error("invariant violated: {0}")]
    Invariant(String),

    /// Malformed input file content.
    #[error("parse error at {path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    /// An iterative solver failed to reach its residual tolerance.
    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { residual: f64, iterations: usize },

    /// A solver failed to converge for one column of a spring array.
    #[error("no convergence in column {column}: {source}")]
    ColumnNoConvergence {
        column: usize,
        #[source]
        source: Box<Error>,
    },

    /// Too few samples to perform the requested estimate.
    #[error("insufficient data: need at least {needed} samples, got {got}")]
    InsufficientData { needed: usize, got: usize },

    /// The fit input contained no unlocked (0 V) traces.
    #[error("no unlocked (0 V) traces in fit input")]
    NoUnlockedData,

    /// The fit input contained no locked (V > 0) traces.
    #[error("no locked (V > 0) traces in fit input")]
    NoLockedData,

    /// An operation over a collection received nothing to work on.
    #[error("empty input")]
    EmptyInput,

    /// The scan of a fit bracket found more than one basin; the best
    /// scanned point is reported so callers can still make progress.
    #[error("objective not unimodal in bracket; best grid point {best:e}")]
    BracketFailure { best: f64 },

    /// A grid index fell outside the addressed array.
    #[error("index ({row}, {col}) out of range for {rows}x{cols} grid")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    /// A requested voltage cannot be produced by the supply.
    #[error("voltage {voltage} V outside supply range [{min}, {max}] V")]
    VoltageOutOfRange { voltage: f64, min: f64, max: f64 },

    /// The array layout admits no unique bending solution.
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
