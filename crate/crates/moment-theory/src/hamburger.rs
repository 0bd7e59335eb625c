use crate::{MomentError, MomentTable};

/// Solvability check: the Hankel matrix `[C_{r+s}]` for `r, s <= K/2` must
/// be positive semidefinite (smallest eigenvalue at least `-1e-9 * norm`).
pub fn check_hamburger(table: &MomentTable, k_max: u32) -> Result<bool, MomentError> {
    if table.moments.len() <= k_max as usize {
        return Err(MomentError::BadTable(format!(
            "need moments up to {k_max}, table holds {}",
            table.moments.len() - 1
        )));
    }
    let half = (k_max / 2) as usize;
    let n = half + 1;
    let mut h = vec![0.0f64; n * n];
    for r in 0..n {
        for s in 0..n {
            h[r * n + s] = table.moments[r + s];
        }
    }
    let eigs = jacobi_eigenvalues(&mut h, n);
    let norm = eigs.iter().fold(0.0f64, |acc, &e| acc.max(e.abs()));
    let min = eigs.iter().fold(f64::INFINITY, |acc, &e| acc.min(e));
    Ok(min >= -1e-9 * norm.max(1.0))
}

#[derive(Debug, Clone)]
pub struct CarlemanReport {
    /// `(2k, C_{2k}^{1/2k} / (2k))` for `1 <= k <= K/2`.
    pub ratios: Vec<(u32, f64)>,
    /// Scale derived from the uniqueness bound:
    /// `(m+1) * sqrt(2 ln(1/eps) / sqrt(eps))`.
    pub bound_scale: f64,
    pub all_below_bound: bool,
}

/// Growth diagnostics of the even moments. The report states boundedness
/// against the derived scale rather than claiming any limit.
pub fn carleman_report(table: &MomentTable, k_max: u32) -> Result<CarlemanReport, MomentError> {
    if table.moments.len() <= k_max as usize {
        return Err(MomentError::BadTable("table too short".into()));
    }
    let mut ratios = Vec::new();
    for k in 1..=(k_max / 2) {
        let order = 2 * k;
        let c = table.moments[order as usize];
        ratios.push((order, c.powf(1.0 / order as f64) / order as f64));
    }
    let bound_scale =
        (table.m as f64 + 1.0) * (2.0 * (1.0 / table.epsilon).ln() / table.epsilon.sqrt()).sqrt();
    let all_below_bound = ratios.iter().all(|&(_, r)| r <= bound_scale);
    Ok(CarlemanReport {
        ratios,
        bound_scale,
        all_below_bound,
    })
}

/// Cyclic Jacobi sweeps; plenty for the tiny Hankel matrices this crate
/// checks.
fn jacobi_eigenvalues(a: &mut [f64], n: usize) -> Vec<f64> {
    for _sweep in 0..60 {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                off += a[i * n + j] * a[i * n + j];
            }
        }
        if off.sqrt() < 1e-14 * (1.0 + frobenius(a, n)) {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i * n + i]).collect()
}

fn frobenius(a: &[f64], n: usize) -> f64 {
    a.iter().take(n * n).map(|x| x * x).sum::<f64>().sqrt()
}
