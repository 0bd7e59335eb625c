use pa_core::MultiGraph;
use spectra::CsrMatrix;

use crate::EdgeError;

const MAX_ITERS: u64 = 100_000;
const RESIDUAL_FACTOR: f64 = 1e-8;
const RITZ_EVERY: u64 = 10;

/// Eigenvalue with its unit eigenvector over the live vertices (index 0 is
/// the first live vertex).
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vec<f64>,
}

/// Top `k` eigenpairs in decreasing eigenvalue order.
///
/// Blocked orthogonal iteration on `A + cI` with `c = sqrt(max row sum) + 1`:
/// any positive shift makes the algebraically largest eigenvalues dominant
/// in magnitude (nonnegative symmetric matrices satisfy
/// `|lambda_min| <= lambda_max`), and a shift near `lambda_1` splits the
/// near-symmetric extreme pair quickly. Two guard vectors ride along and
/// Rayleigh-Ritz extraction resolves nearly degenerate leaders, which
/// single-vector deflation cannot. Residual target per returned pair is
/// `1e-8 * lambda_1`.
pub fn top_eigenpairs(g: &MultiGraph, k: usize) -> Result<Vec<EigenPair>, EdgeError> {
    let a = CsrMatrix::from_graph(g);
    top_eigenpairs_csr(&a, k)
}

pub(crate) fn top_eigenpairs_csr(a: &CsrMatrix, k: usize) -> Result<Vec<EigenPair>, EdgeError> {
    let n = a.n();
    let max_row = (0..n).map(|i| a.row_sum(i)).max().unwrap_or(0);
    if max_row == 0 {
        return Err(EdgeError::EmptyGraph);
    }
    let k = k.min(n);
    if k == 0 {
        return Ok(Vec::new());
    }
    let shift = (max_row as f64).sqrt() + 1.0;
    let block = (k + 2).min(n);
    let mut q: Vec<Vec<f64>> = (0..block)
        .map(|col| {
            (0..n)
                .map(|i| splitmix((col as u64) << 32 | i as u64))
                .collect()
        })
        .collect();
    orthonormalize(&mut q, 0);
    let mut z: Vec<Vec<f64>> = vec![vec![0.0; n]; block];
    let mut last_residual = f64::INFINITY;
    let mut last_target = 0.0;
    for it in 0..MAX_ITERS {
        if it % RITZ_EVERY == 0 {
            // Rayleigh-Ritz on the unshifted matrix
            for (qi, zi) in q.iter().zip(z.iter_mut()) {
                a.mul_into(qi, zi);
            }
            let mut h = vec![0.0f64; block * block];
            for i in 0..block {
                for j in 0..=i {
                    let v = dot(&q[i], &z[j]);
                    h[i * block + j] = v;
                    h[j * block + i] = v;
                }
            }
            let (theta, vecs) = jacobi_small(h, block);
            let mut order: Vec<usize> = (0..block).collect();
            order.sort_by(|&x, &y| theta[y].partial_cmp(&theta[x]).unwrap());
            let lambda1 = theta[order[0]];
            let target = RESIDUAL_FACTOR * lambda1.abs().max(1.0);
            // assemble the k leading Ritz vectors and their residuals
            let mut pairs = Vec::with_capacity(k);
            let mut worst = 0.0f64;
            for &col in order.iter().take(k) {
                let mut w = vec![0.0f64; n];
                let mut aw = vec![0.0f64; n];
                for j in 0..block {
                    let c = vecs[j * block + col];
                    if c != 0.0 {
                        for i in 0..n {
                            w[i] += c * q[j][i];
                            aw[i] += c * z[j][i];
                        }
                    }
                }
                let norm = dot(&w, &w).sqrt();
                for i in 0..n {
                    w[i] /= norm;
                    aw[i] /= norm;
                }
                let lam = theta[col];
                let mut res = 0.0f64;
                for i in 0..n {
                    res += (aw[i] - lam * w[i]).powi(2);
                }
                worst = worst.max(res.sqrt());
                pairs.push(EigenPair {
                    value: lam,
                    vector: w,
                });
            }
            if worst <= target {
                return Ok(pairs);
            }
            last_residual = worst;
            last_target = target;
            // reuse A q already in z for the power step below
            for (qi, zi) in q.iter().zip(z.iter_mut()) {
                for i in 0..n {
                    zi[i] += shift * qi[i];
                }
            }
        } else {
            for (qi, zi) in q.iter().zip(z.iter_mut()) {
                a.mul_into(qi, zi);
                for i in 0..n {
                    zi[i] += shift * qi[i];
                }
            }
        }
        std::mem::swap(&mut q, &mut z);
        orthonormalize(&mut q, it + 1);
    }
    Err(EdgeError::NoConvergence {
        iters: MAX_ITERS,
        residual: last_residual,
        target: last_target,
    })
}

/// Spectral norm `||A||` of the difference operator `x -> (A - B) x`
/// (either side may be empty), via power iteration on the square of the
/// operator, which is positive semidefinite regardless of signs.
pub fn operator_norm(a: &CsrMatrix, b: Option<&CsrMatrix>) -> f64 {
    let n = a.n();
    if let Some(b) = b {
        assert_eq!(b.n(), n, "operands must share the vertex space");
    }
    let mut v: Vec<f64> = (0..n).map(|i| splitmix(i as u64 ^ 0xDEAD)).collect();
    let nv = dot(&v, &v).sqrt();
    v.iter_mut().for_each(|x| *x /= nv);
    let mut tmp = vec![0.0f64; n];
    let mut tmp2 = vec![0.0f64; n];
    let apply = |x: &[f64], out: &mut [f64], tmp: &mut [f64]| {
        a.mul_into(x, tmp);
        if let Some(b) = b {
            b.mul_into(x, out);
            for i in 0..out.len() {
                tmp[i] -= out[i];
            }
        }
        out.copy_from_slice(tmp);
    };
    let mut sq = 0.0f64;
    for _ in 0..4000 {
        apply(&v, &mut tmp2, &mut tmp);
        let w = tmp2.clone();
        apply(&w, &mut tmp2, &mut tmp);
        let next_sq = dot(&v, &tmp2);
        let norm = dot(&tmp2, &tmp2).sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        for i in 0..n {
            v[i] = tmp2[i] / norm;
        }
        if (next_sq - sq).abs() <= 1e-10 * next_sq.abs().max(1e-30) {
            sq = next_sq;
            break;
        }
        sq = next_sq;
    }
    sq.max(0.0).sqrt()
}

fn splitmix(seed: u64) -> f64 {
    let mut x = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^= x >> 31;
    (x as f64 / u64::MAX as f64) - 0.5
}

/// Modified Gram-Schmidt; collapsed columns are re-seeded deterministically
/// from the salt.
fn orthonormalize(q: &mut [Vec<f64>], salt: u64) {
    let n = q.first().map(|c| c.len()).unwrap_or(0);
    for i in 0..q.len() {
        for j in 0..i {
            let (head, tail) = q.split_at_mut(i);
            let r = dot(&tail[0], &head[j]);
            for t in 0..n {
                tail[0][t] -= r * head[j][t];
            }
        }
        let mut norm = dot(&q[i], &q[i]).sqrt();
        if norm < 1e-300 {
            for t in 0..n {
                q[i][t] = splitmix(
                    salt.wrapping_mul(31)
                        .wrapping_add(((i as u64) << 40) | t as u64),
                );
            }
            for j in 0..i {
                let (head, tail) = q.split_at_mut(i);
                let r = dot(&tail[0], &head[j]);
                for t in 0..n {
                    tail[0][t] -= r * head[j][t];
                }
            }
            norm = dot(&q[i], &q[i]).sqrt();
        }
        for t in 0..n {
            q[i][t] /= norm;
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Cyclic Jacobi with eigenvector accumulation for the tiny Ritz matrix;
/// returns (values, vectors column-major).
fn jacobi_small(mut a: Vec<f64>, n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut v = vec![0.0f64; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                off += a[i * n + j] * a[i * n + j];
            }
        }
        if off.sqrt() < 1e-13 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
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
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let values = (0..n).map(|i| a[i * n + i]).collect();
    (values, v)
}
