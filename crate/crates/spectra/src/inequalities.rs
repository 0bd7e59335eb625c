use crate::{eigenvalues, AdjacencyMatrix, CsrMatrix, SpectraError};

/// Eigen tolerance used when asserting the exact inequalities on floating
/// point output.
const EIG_TOL: f64 = 1e-8;

/// Cauchy interlacing: with `B` the principal submatrix of `A` on `keep`
/// (descending eigenvalues `l` of `A`, `b` of `B`), checks
/// `l_j >= b_j >= l_{j + n - m}` for every `j`.
pub fn check_interlacing(a: &AdjacencyMatrix, keep: &[usize]) -> Result<bool, SpectraError> {
    let n = a.n();
    if keep.is_empty() || keep.iter().any(|&i| i >= n) {
        return Err(SpectraError::BadIndexSet);
    }
    let mut keep_sorted = keep.to_vec();
    keep_sorted.sort_unstable();
    keep_sorted.dedup();
    let b = a.principal_submatrix(&keep_sorted);
    let la = eigenvalues(a)?;
    let lb = eigenvalues(&b)?;
    let m = keep_sorted.len();
    let scale = la.atoms()[0].abs().max(la.atoms()[n - 1].abs()).max(1.0);
    let tol = EIG_TOL * scale;
    for j in 0..m {
        let upper = la.atoms()[j];
        let lower = la.atoms()[j + n - m];
        let beta = lb.atoms()[j];
        if beta > upper + tol || beta < lower - tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Weyl: `|lambda_i(A) - lambda_i(A + B)| <= ||B||` for every `i`.
pub fn check_weyl(a: &AdjacencyMatrix, b: &AdjacencyMatrix) -> Result<bool, SpectraError> {
    if a.n() != b.n() {
        return Err(SpectraError::DimensionMismatch(a.n(), b.n()));
    }
    let n = a.n();
    let mut sum = AdjacencyMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            sum.set(i, j, a.get(i, j) + b.get(i, j));
        }
    }
    let la = eigenvalues(a)?;
    let lb = eigenvalues(b)?;
    let ls = eigenvalues(&sum)?;
    let delta = lb.atoms()[0].abs().max(lb.atoms()[n - 1].abs());
    let scale = la.atoms()[0].abs().max(1.0);
    for i in 0..n {
        if (la.atoms()[i] - ls.atoms()[i]).abs() > delta + EIG_TOL * scale {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Weighted row-sum bound for a nonnegative symmetric matrix:
/// `||A|| <= max_i (1/c_i) sum_j c_j a_ij` for any positive weights `c`.
pub fn norm_upper_bound(a: &CsrMatrix, c: &[f64]) -> Result<f64, SpectraError> {
    if c.len() != a.n() {
        return Err(SpectraError::DimensionMismatch(c.len(), a.n()));
    }
    if let Some(idx) = c.iter().position(|&x| !(x > 0.0)) {
        return Err(SpectraError::BadWeight(idx));
    }
    let mut bound = 0.0f64;
    for i in 0..a.n() {
        let mut acc = 0.0;
        for (j, w) in a.row(i) {
            acc += c[j] * w as f64;
        }
        bound = bound.max(acc / c[i]);
    }
    Ok(bound)
}
