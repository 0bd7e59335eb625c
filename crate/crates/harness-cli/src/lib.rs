//! Experiment orchestration: config parsing, seed management, replicate
//! scheduling, persistence and report generation for the `pa-lab` binary.

pub mod config;
pub mod experiments;

pub use config::{ExperimentConfig, ExperimentId, Normalize, ThresholdOverrides};
pub use experiments::{run, RunSummary};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("config error at line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("invalid configuration: {0}")]
    Invalid(String),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] pa_core::CoreError),
    #[error(transparent)]
    Spectra(#[from] spectra::SpectraError),
    #[error(transparent)]
    Moments(#[from] moment_theory::MomentError),
    #[error(transparent)]
    Census(#[from] subgraph_census::CensusError),
    #[error(transparent)]
    Density(#[from] density_recon::DensityError),
    #[error(transparent)]
    Edge(#[from] edge_localize::EdgeError),
    #[error(transparent)]
    Prob(#[from] exact_prob::ProbError),
}

pub(crate) fn io_err(path: &std::path::Path) -> impl FnOnce(std::io::Error) -> HarnessError + '_ {
    move |source| HarnessError::Io {
        path: path.display().to_string(),
        source,
    }
}
