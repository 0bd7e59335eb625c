use rand::Rng;
use rand::SeedableRng;
use rand_pcg::Pcg64;

use crate::{CoreError, GraphConfig, MultiGraph};

/// Samples `G_{1,n}`.
///
/// The endpoint array holds both endpoints of every edge placed so far, so
/// slot counts equal degrees (a loop appears twice). At step `t` the new
/// vertex adds one phantom slot for itself and one of the `2t - 1` slots is
/// drawn uniformly: slot `2t - 2` means a loop, anything else attaches to
/// the vertex stored there. Step 1 degenerates to the mandatory loop at
/// vertex 1.
pub fn generate_g1(n: u32, seed: u64) -> Result<MultiGraph, CoreError> {
    if n == 0 {
        return Err(CoreError::EmptyGraph);
    }
    let mut rng = Pcg64::seed_from_u64(seed);
    let mut endpoints: Vec<u32> = Vec::with_capacity(2 * n as usize);
    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(n as usize);
    for t in 1..=n {
        let slots = endpoints.len() + 1; // == 2t - 1
        let draw = rng.gen_range(0..slots);
        let x = if draw == slots - 1 {
            t
        } else {
            endpoints[draw]
        };
        edges.push((x, t));
        endpoints.push(x);
        endpoints.push(t);
        debug_assert_eq!(endpoints.len(), 2 * t as usize);
    }
    Ok(MultiGraph::from_parts(n, 1, edges, 1, seed))
}

/// Collapses consecutive groups of `m` vertices of a graph on `[m*n']` into
/// single vertices; edge count and multiplicities are preserved, intra-group
/// edges become loops.
pub fn collapse(g1: &MultiGraph, m: u32) -> Result<MultiGraph, CoreError> {
    if m == 0 {
        return Err(CoreError::BadM);
    }
    if g1.n() % m != 0 {
        return Err(CoreError::NotDivisible(g1.n(), m));
    }
    if m == 1 {
        return Ok(g1.clone());
    }
    let n = g1.n() / m;
    let group = |v: u32| (v - 1) / m + 1;
    let edges: Vec<(u32, u32)> = g1
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (group(u), group(v));
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    Ok(MultiGraph::from_parts(n, 1, edges, m, g1.seed()))
}

/// Samples `G_{m,n}` by generating `G_{1,mn}` and collapsing. Deterministic
/// in the seed.
pub fn generate(cfg: &GraphConfig) -> Result<MultiGraph, CoreError> {
    if cfg.m == 0 {
        return Err(CoreError::BadM);
    }
    if cfg.n == 0 {
        return Err(CoreError::EmptyGraph);
    }
    let mn = cfg.m as u64 * cfg.n as u64;
    if mn > u32::MAX as u64 {
        return Err(CoreError::TooLarge(mn));
    }
    let g1 = generate_g1(mn as u32, cfg.seed)?;
    collapse(&g1, cfg.m)
}
