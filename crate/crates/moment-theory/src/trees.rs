use crate::{MomentError, OrderedGraph};

/// Enumeration stops at 10 vertices (10^8 labeled trees).
pub const TREE_VERTEX_CAP: usize = 10;

/// All `t^(t-2)` labeled trees on `t` ordered vertices, decoded from their
/// attachment sequences; `t = 1` yields the edgeless singleton and `t = 2`
/// the single edge.
pub fn enumerate_labeled_trees(t: usize) -> Result<Vec<OrderedGraph>, MomentError> {
    if t > TREE_VERTEX_CAP {
        return Err(MomentError::TreeCap(t, TREE_VERTEX_CAP));
    }
    if t == 0 {
        return Ok(Vec::new());
    }
    if t == 1 {
        return Ok(vec![OrderedGraph::new(1, [])]);
    }
    if t == 2 {
        return Ok(vec![OrderedGraph::new(2, [(0, 1)])]);
    }
    let len = t - 2;
    let count = (t as u64).pow(len as u32);
    let mut out = Vec::with_capacity(count as usize);
    let mut seq = vec![0usize; len];
    loop {
        out.push(prufer_decode(t, &seq));
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == len {
                return Ok(out);
            }
            seq[pos] += 1;
            if seq[pos] < t {
                break;
            }
            seq[pos] = 0;
            pos += 1;
        }
    }
}

fn prufer_decode(t: usize, seq: &[usize]) -> OrderedGraph {
    // Pointer-leaf decoding: always join the smallest current leaf with the
    // next sequence entry; the final edge involves vertex t-1.
    let mut degree = vec![1u32; t];
    for &a in seq {
        degree[a] += 1;
    }
    let mut edges = Vec::with_capacity(t - 1);
    let mut ptr = 0usize;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &a in seq {
        edges.push((leaf, a));
        degree[a] -= 1;
        if degree[a] == 1 && a < ptr {
            leaf = a;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, t - 1));
    OrderedGraph::new(t, edges)
}

/// Number of labeled trees on `k+1` vertices with the given degree
/// sequence: the multinomial `(k-1; d_1 - 1, ..., d_{k+1} - 1)`. Returns 0
/// for sequences that no tree realizes (some `d_i = 0` or wrong sum).
pub fn moon_count(degrees: &[u32]) -> u128 {
    let t = degrees.len();
    if t == 0 || degrees.iter().any(|&d| d == 0) {
        return 0;
    }
    if t == 1 {
        return if degrees[0] == 0 { 1 } else { 0 };
    }
    let sum: u64 = degrees.iter().map(|&d| d as u64).sum();
    if sum != 2 * (t as u64 - 1) {
        return 0;
    }
    let mut value: u128 = 1;
    let mut remaining = (t - 2) as u128;
    for &d in degrees {
        value *= binomial(remaining, (d - 1) as u128);
        remaining -= (d - 1) as u128;
    }
    value
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
