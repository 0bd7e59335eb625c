//! Limiting spectral-moment constants of truncated attachment graphs.
//!
//! The k-th even moment is assembled from four ingredients:
//! ordered trees with at most k/2 edges, their closed-walk counts, a
//! rising/falling-factorial weight capturing edge correlations, and an
//! iterated power-law integral over the ordered simplex `[eps, 1]`. The
//! odd moments vanish by symmetry and are returned as exact zeros.

mod hamburger;
mod moments;
mod ordered;
mod phi;
mod psi;
mod symbolic;
mod trees;
mod walks;

pub use hamburger::{carleman_report, check_hamburger, CarlemanReport};
pub use moments::{build_moment_table, limit_moment_c, magnitude_exponents, MomentTable};
pub use ordered::OrderedGraph;
pub use phi::{falling, phi, rising};
pub use psi::psi;
pub use symbolic::SymbolicFn;
pub use trees::{enumerate_labeled_trees, moon_count, TREE_VERTEX_CAP};
pub use walks::{tree_walk_closed_form, walk_count_m, WALK_EDGE_CAP};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum MomentError {
    #[error("vertex count {0} exceeds the tree enumeration cap {1}")]
    TreeCap(usize, usize),
    #[error("moment order {0} exceeds the pipeline cap {1}")]
    MomentCap(u32, u32),
    #[error("walk census limited to {1} edges, got {0}")]
    WalkCap(usize, usize),
    #[error("invalid degree sequence: {0}")]
    BadDegrees(String),
    #[error("epsilon must lie strictly between 0 and 1, got {0}")]
    BadEpsilon(f64),
    #[error("m must be at least 1")]
    BadM,
    #[error("moment table malformed: {0}")]
    BadTable(String),
    #[error("json: {0}")]
    Json(String),
}
