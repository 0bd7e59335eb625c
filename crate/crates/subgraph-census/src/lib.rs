//! Counting copies of small ordered graphs inside sampled attachment
//! graphs, with optional per-vertex label windows, plus the comparison of
//! the 2-path census against its predicted growth.

mod count;
mod theory;

pub use count::{count_ordered_subgraphs, enumerate_walk_patterns, VertexWindow, CENSUS_CAPS};
pub use theory::{census_vs_theory, expected_path2_count, write_census_csv, CensusReport};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("pattern exceeds census caps: {0} vertices / {1} edges (caps {2} / {3})")]
    PatternTooBig(usize, usize, usize, usize),
    #[error("window list has {0} entries for a {1}-vertex pattern")]
    WindowMismatch(usize, usize),
    #[error("pattern must be the center-first 2-path for this report")]
    NotCenterFirstPath,
    #[error("graph error: {0}")]
    Core(#[from] pa_core::CoreError),
}
