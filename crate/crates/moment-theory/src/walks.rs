use crate::{MomentError, OrderedGraph};

/// Inclusion-exclusion explodes as 2^|E|; census patterns stay far below
/// this.
pub const WALK_EDGE_CAP: usize = 14;

const WALK_LENGTH_CAP: u32 = 24;

/// Number of closed `k`-walks on `h` whose edge union is all of `h`,
/// computed by inclusion-exclusion over omitted edge instances:
/// `sum_{F subset E} (-1)^|F| Tr(A_{h without F}^k)`. Works for loops and
/// parallel edges (each instance is its own element). Returns 0 whenever no
/// walk of that length can cover the graph.
pub fn walk_count_m(h: &OrderedGraph, k: u32) -> Result<u128, MomentError> {
    let e = h.num_edges();
    if e > WALK_EDGE_CAP {
        return Err(MomentError::WalkCap(e, WALK_EDGE_CAP));
    }
    if k == 0 || k > WALK_LENGTH_CAP {
        return Err(MomentError::MomentCap(k, WALK_LENGTH_CAP));
    }
    if (k as usize) < e {
        return Ok(0);
    }
    let t = h.t();
    let mut total: i128 = 0;
    for mask in 0u32..(1 << e) {
        let mut a = vec![0i128; t * t];
        for (idx, &(i, j)) in h.edges().iter().enumerate() {
            if mask & (1 << idx) != 0 {
                continue;
            }
            if i == j {
                a[i * t + i] += 1;
            } else {
                a[i * t + j] += 1;
                a[j * t + i] += 1;
            }
        }
        let tr = trace_power(&a, t, k);
        if mask.count_ones() % 2 == 0 {
            total += tr;
        } else {
            total -= tr;
        }
    }
    debug_assert!(total >= 0, "inclusion-exclusion went negative: {total}");
    Ok(total as u128)
}

fn trace_power(a: &[i128], t: usize, k: u32) -> i128 {
    let mut acc = a.to_vec();
    for _ in 1..k {
        let mut next = vec![0i128; t * t];
        for i in 0..t {
            for l in 0..t {
                let v = acc[i * t + l];
                if v != 0 {
                    for j in 0..t {
                        next[i * t + j] += v * a[l * t + j];
                    }
                }
            }
        }
        acc = next;
    }
    (0..t).map(|i| acc[i * t + i]).sum()
}

/// Closed form for a tree with exactly `k` edges at walk length `2k`:
/// `2k * prod_v (d(v) - 1)!`.
pub fn tree_walk_closed_form(h: &OrderedGraph) -> u128 {
    assert!(h.is_tree(), "closed form applies to trees");
    let k = h.num_edges() as u128;
    if k == 0 {
        return 0;
    }
    let mut acc = 2 * k;
    for d in h.degree_sequence() {
        for f in 2..d as u128 {
            acc *= f;
        }
    }
    acc
}
