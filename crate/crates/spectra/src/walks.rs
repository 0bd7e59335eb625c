use num_bigint::BigUint;
use pa_core::MultiGraph;

use crate::{CsrMatrix, SpectraError};

/// Exact closed-walk count `Tr(A^k)`. The fast path accumulates in
/// `u128` over `u64` row values; if that ever overflows the computation
/// reruns in big integers, so callers always get the exact count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WalkTrace {
    Exact(u128),
    Big(BigUint),
}

impl WalkTrace {
    pub fn to_f64(&self) -> f64 {
        match self {
            WalkTrace::Exact(v) => *v as f64,
            WalkTrace::Big(b) => b.to_string().parse().unwrap_or(f64::INFINITY),
        }
    }

    pub fn as_u128(&self) -> Option<u128> {
        match self {
            WalkTrace::Exact(v) => Some(*v),
            WalkTrace::Big(_) => None,
        }
    }
}

/// Number of closed `k`-walks, which equals `Tr(A^k)` exactly.
pub fn trace_power_walks(g: &MultiGraph, k: u32) -> Result<WalkTrace, SpectraError> {
    Ok(trace_powers(g, k)?.pop().expect("k >= 1"))
}

/// `Tr(A^j)` for `j = 1 ..= kmax`, by sparse row powers: for every start
/// vertex the rows of `A^j` are grown with a dense scratch buffer, and
/// `(A^{2j})_{ii} = ||row_j||^2`, `(A^{2j+1})_{ii} = <row_j, row_{j+1}>`.
/// Cost is `sum_v deg(v)^2` for `kmax <= 4` and stays practical far beyond
/// desk scale on truncated graphs.
pub fn trace_powers(g: &MultiGraph, kmax: u32) -> Result<Vec<WalkTrace>, SpectraError> {
    if kmax == 0 {
        return Err(SpectraError::ZeroPower);
    }
    let a = CsrMatrix::from_graph(g);
    match trace_powers_u64(&a, kmax) {
        Some(v) => Ok(v.into_iter().map(WalkTrace::Exact).collect()),
        None => Ok(trace_powers_big(&a, kmax)
            .into_iter()
            .map(WalkTrace::Big)
            .collect()),
    }
}

fn trace_powers_u64(a: &CsrMatrix, kmax: u32) -> Option<Vec<u128>> {
    let n = a.n();
    let jmax = ((kmax + 1) / 2) as usize;
    let mut traces = vec![0u128; kmax as usize];
    let mut scratch = vec![0u64; n];
    let mut touched: Vec<usize> = Vec::new();
    for i in 0..n {
        // rows[j] holds row i of A^{j+1} as sparse (col, value) pairs
        let mut rows: Vec<Vec<(usize, u64)>> = Vec::with_capacity(jmax);
        rows.push(a.row(i).map(|(c, w)| (c, w as u64)).collect());
        for j in 1..jmax {
            let prev = &rows[j - 1];
            for &(c, v) in prev {
                for (c2, w) in a.row(c) {
                    let add = v.checked_mul(w as u64)?;
                    let cell = &mut scratch[c2];
                    if *cell == 0 {
                        touched.push(c2);
                    }
                    *cell = cell.checked_add(add)?;
                }
            }
            let mut next: Vec<(usize, u64)> = Vec::with_capacity(touched.len());
            for &c in &touched {
                next.push((c, scratch[c]));
                scratch[c] = 0;
            }
            touched.clear();
            next.sort_unstable_by_key(|&(c, _)| c);
            rows.push(next);
        }
        accumulate_traces(&rows, a, i, kmax, &mut traces)?;
    }
    Some(traces)
}

fn accumulate_traces(
    rows: &[Vec<(usize, u64)>],
    a: &CsrMatrix,
    i: usize,
    kmax: u32,
    traces: &mut [u128],
) -> Option<()> {
    for k in 1..=kmax as usize {
        let contrib: u128 = if k == 1 {
            a.get(i, i) as u128
        } else if k % 2 == 0 {
            let r = &rows[k / 2 - 1];
            let mut acc = 0u128;
            for &(_, v) in r {
                acc = acc.checked_add((v as u128).checked_mul(v as u128)?)?;
            }
            acc
        } else {
            let lo = &rows[k / 2 - 1];
            let hi = &rows[k / 2];
            sparse_dot(lo, hi)?
        };
        traces[k - 1] = traces[k - 1].checked_add(contrib)?;
    }
    Some(())
}

fn sparse_dot(a: &[(usize, u64)], b: &[(usize, u64)]) -> Option<u128> {
    let mut acc = 0u128;
    let mut ia = 0;
    let mut ib = 0;
    while ia < a.len() && ib < b.len() {
        match a[ia].0.cmp(&b[ib].0) {
            std::cmp::Ordering::Less => ia += 1,
            std::cmp::Ordering::Greater => ib += 1,
            std::cmp::Ordering::Equal => {
                acc = acc.checked_add((a[ia].1 as u128).checked_mul(b[ib].1 as u128)?)?;
                ia += 1;
                ib += 1;
            }
        }
    }
    Some(acc)
}

fn trace_powers_big(a: &CsrMatrix, kmax: u32) -> Vec<BigUint> {
    let n = a.n();
    let jmax = ((kmax + 1) / 2) as usize;
    let mut traces = vec![BigUint::ZERO; kmax as usize];
    for i in 0..n {
        let mut rows: Vec<Vec<(usize, BigUint)>> = Vec::with_capacity(jmax);
        rows.push(a.row(i).map(|(c, w)| (c, BigUint::from(w))).collect());
        for j in 1..jmax {
            let mut dense: std::collections::BTreeMap<usize, BigUint> =
                std::collections::BTreeMap::new();
            for (c, v) in &rows[j - 1] {
                for (c2, w) in a.row(*c) {
                    *dense.entry(c2).or_insert(BigUint::ZERO) += v * BigUint::from(w);
                }
            }
            rows.push(dense.into_iter().collect());
        }
        for k in 1..=kmax as usize {
            let contrib: BigUint = if k == 1 {
                BigUint::from(a.get(i, i))
            } else if k % 2 == 0 {
                rows[k / 2 - 1].iter().map(|(_, v)| v * v).sum()
            } else {
                let (lo, hi) = (&rows[k / 2 - 1], &rows[k / 2]);
                let mut acc = BigUint::ZERO;
                let mut ia = 0;
                let mut ib = 0;
                while ia < lo.len() && ib < hi.len() {
                    match lo[ia].0.cmp(&hi[ib].0) {
                        std::cmp::Ordering::Less => ia += 1,
                        std::cmp::Ordering::Greater => ib += 1,
                        std::cmp::Ordering::Equal => {
                            acc += &lo[ia].1 * &hi[ib].1;
                            ia += 1;
                            ib += 1;
                        }
                    }
                }
                acc
            };
            traces[k - 1] += contrib;
        }
    }
    traces
}
