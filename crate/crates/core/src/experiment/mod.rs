//! Seeded experiments: configuration, runs, aggregation and export.

mod config;
mod export;
mod report;
mod run;

pub use config::{load_config, ExperimentConfig, FuzzyConfig, DEFAULT_RUNS};
pub use export::{
    export_event_log, export_report, read_event_log, read_report, write_event_log, write_outputs,
    write_report, OutputFormat,
};
pub use report::{Metric, MetricsReport, PolicyMetrics, Stat};
pub use run::{compare, run, Comparison, RunMetrics, RunResult};

use std::path::PathBuf;

use thiserror::Error;

use crate::error::ConfigError;
use crate::evolver::EvolverError;
use crate::fuzzy::FuzzyError;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("config parse error: {0}")]
    Parse(#[source] serde_json::Error),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
    #[error(transparent)]
    Evolver(#[from] EvolverError),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("format: {0}")]
    Format(String),
}

impl ExperimentError {
    /// Configuration problems, as opposed to runtime failures.
    pub fn is_config(&self) -> bool {
        matches!(
            self,
            ExperimentError::Parse(_) | ExperimentError::Config(_) | ExperimentError::Fuzzy(_)
        )
    }
}
