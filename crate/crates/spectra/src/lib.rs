//! Adjacency matrices, eigendecompositions, empirical spectral measures and
//! closed-walk counts for attachment multigraphs, plus the matrix
//! inequalities (interlacing, Weyl, weighted row-sum norm bound,
//! Davis-Kahan ingredients) used as runtime checks.

mod adjacency;
mod eigen;
mod inequalities;
mod measure;
mod walks;

pub use adjacency::{adjacency, AdjacencyMatrix, CsrMatrix};
pub use eigen::{eigen_full, eigenvalues, EigenDecomposition, DENSE_EIGEN_CAP};
pub use inequalities::{check_interlacing, check_weyl, norm_upper_bound};
pub use measure::{
    esd_moment, interval_distance, truncation_distance, write_eigenvalues_csv, write_histogram_csv,
    Histogram, SpectralMeasure,
};
pub use walks::{trace_power_walks, trace_powers, WalkTrace};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpectraError {
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("eigensolver failed: {0}")]
    Eigen(String),
    #[error("weights must be strictly positive (index {0})")]
    BadWeight(usize),
    #[error("index set out of range or empty")]
    BadIndexSet,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("k = 0 walk traces are trivial; ask for k >= 1")]
    ZeroPower,
    #[error("matrix of size {0} exceeds the dense eigensolver cap {1}")]
    TooLargeForDense(usize, usize),
}
