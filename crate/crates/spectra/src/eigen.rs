use faer::Side;

use crate::{AdjacencyMatrix, SpectraError, SpectralMeasure};

/// Dense solves stop a little above figure scale (n = 6000); larger graphs
/// are served by walk counts or the sparse iteration instead.
pub const DENSE_EIGEN_CAP: usize = 6500;

/// Full symmetric eigendecomposition, eigenvalues descending. Ties are
/// broken by the solver's output order (stable sort), which makes repeated
/// runs identical.
pub struct EigenDecomposition {
    pub measure: SpectralMeasure,
    /// `vectors[k]` is the unit eigenvector of the k-th largest eigenvalue.
    pub vectors: Vec<Vec<f64>>,
}

pub fn eigen_full(a: &AdjacencyMatrix) -> Result<EigenDecomposition, SpectraError> {
    if a.n() > DENSE_EIGEN_CAP {
        return Err(SpectraError::TooLargeForDense(a.n(), DENSE_EIGEN_CAP));
    }
    if let Some((i, j)) = a.is_symmetric() {
        return Err(SpectraError::NotSymmetric(i, j));
    }
    let n = a.n();
    let mat = a.to_faer();
    let evd = mat
        .self_adjoint_eigen(Side::Lower)
        .map_err(|e| SpectraError::Eigen(format!("{e:?}")))?;
    let s = evd.S().column_vector();
    let u = evd.U();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| s[j].partial_cmp(&s[i]).unwrap().then(i.cmp(&j)));
    let atoms: Vec<f64> = order.iter().map(|&i| s[i]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&col| (0..n).map(|r| u[(r, col)]).collect())
        .collect();
    Ok(EigenDecomposition {
        measure: SpectralMeasure::new(atoms, 1.0),
        vectors,
    })
}

/// Eigenvalues only (descending); cheaper than `eigen_full` at figure
/// scale.
pub fn eigenvalues(a: &AdjacencyMatrix) -> Result<SpectralMeasure, SpectraError> {
    if a.n() > DENSE_EIGEN_CAP {
        return Err(SpectraError::TooLargeForDense(a.n(), DENSE_EIGEN_CAP));
    }
    if let Some((i, j)) = a.is_symmetric() {
        return Err(SpectraError::NotSymmetric(i, j));
    }
    let mat = a.to_faer();
    let mut vals = mat
        .self_adjoint_eigenvalues(Side::Lower)
        .map_err(|e| SpectraError::Eigen(format!("{e:?}")))?;
    vals.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(SpectralMeasure::new(vals, 1.0))
}
