//! Experiment sweeps, exponent fits, and the invariant suites behind the
//! command-line tool.

mod fit;
mod record;
mod sweep;
mod verify;

pub use fit::{emit_report, fit_exponent, fit_points, FitResult, XField};
pub use record::{emit_csv, parse_csv, write_csv, TrialRecord, CSV_HEADER};
pub use sweep::{
    derive_seed, generate_instance, ground_truth, run_algorithm, run_sweep, Algorithm, Family,
    SweepConfig,
};
pub use verify::{run_suite, Suite, SuiteReport};

use thiserror::Error;

use crate::graph::GraphError;
use crate::grover::GroverError;
use crate::instances::InstanceError;
use crate::qconn::QconnError;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("config line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("invalid sweep: {0}")]
    Invalid(String),
    #[error("fit needs at least 3 distinct positive x values, got {0}")]
    InsufficientPoints(usize),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Qconn(#[from] QconnError),
    #[error(transparent)]
    Grover(#[from] GroverError),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub(crate) fn io_err(path: &std::path::Path) -> impl FnOnce(std::io::Error) -> HarnessError + '_ {
    move |source| HarnessError::Io { path: path.display().to_string(), source }
}
