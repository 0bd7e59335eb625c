//! Edge-eigenvalue and eigenvector experiments: top eigenpairs by shifted
//! power iteration with deflation, the comparison of leading eigenvalues
//! against square-root degrees, hub localization of leading eigenvectors,
//! the star decomposition that explains both, and Davis-Kahan angle
//! certificates.

mod davis_kahan;
mod decompose;
mod power;
mod reports;

pub use davis_kahan::{davis_kahan_certificate, davis_kahan_star_certificate};
pub use decompose::{
    decompose, decomposition_report, DecompositionParams, DecompositionReport, StarDecomposition,
};
pub use power::{operator_norm, top_eigenpairs, EigenPair};
pub use reports::{
    degree_gap_report, edge_law_report, localization_report, write_vector_csv, DegreeGapRow,
    EdgeLawRow, LocalizationRow,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EdgeError {
    #[error("power iteration did not converge after {iters} iterations (residual {residual:e}, target {target:e})")]
    NoConvergence {
        iters: u64,
        residual: f64,
        target: f64,
    },
    #[error("graph has no edges among live vertices")]
    EmptyGraph,
    #[error(
        "decomposition thresholds out of order: need s < t_thresh <= n, got s={s} t={t} n={n}"
    )]
    BadThresholds { s: u32, t: u32, n: u32 },
    #[error("eigen index {0} out of range (matrix of size {1})")]
    BadIndex(usize, usize),
    #[error(transparent)]
    Spectra(#[from] spectra::SpectraError),
}
