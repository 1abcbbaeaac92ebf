use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum FdpError {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported pair: likelihood ratio is not monotone; supply a monotone pair or use mc_estimate_tradeoff")]
    UnsupportedPair,

    #[error("accuracy budget exceeded: {0}")]
    Accuracy(String),

    #[error("calibration failed: target epsilon {target} unreachable in bracket [{sigma_lo}, {sigma_hi}] (epsilon {eps_lo}..{eps_hi})")]
    Calibration {
        target: f64,
        sigma_lo: f64,
        sigma_hi: f64,
        eps_lo: f64,
        eps_hi: f64,
    },

    #[error("schema error in column `{column}`: {detail}")]
    Schema { column: String, detail: String },

    #[error("parse failure at row {row}, column `{column}`: {detail}")]
    Parse {
        row: usize,
        column: String,
        detail: String,
    },

    #[error("norm violation at row {row}: |x| = {norm} exceeds declared bound {bound}")]
    NormViolation { row: usize, norm: f64, bound: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("non-finite gradient at step {step}")]
    NonFinite { step: usize },

    #[error("empty dataset")]
    EmptyDataset,

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("attack error: {0}")]
    Attack(String),

    #[error("simulator error: {0}")]
    Simulator(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, FdpError>;
