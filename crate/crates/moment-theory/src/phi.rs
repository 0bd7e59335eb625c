use crate::OrderedGraph;

/// Rising factorial `m (m+1) ... (m+r-1)`.
pub fn rising(m: u32, r: u32) -> u128 {
    (0..r as u128).map(|i| m as u128 + i).product()
}

/// Falling factorial `m (m-1) ... (m-r+1)`; zero once `r > m`, which
/// encodes that a vertex cannot send more than `m` edges.
pub fn falling(m: u32, r: u32) -> u128 {
    if r > m {
        return 0;
    }
    (0..r as u128).map(|i| m as u128 - i).product()
}

/// Correlation weight of an ordered graph under the larger-to-smaller edge
/// orientation: `prod_v [m]^{d_in(v)} [m]_{d_out(v)}`.
pub fn phi(h: &OrderedGraph, m: u32) -> u128 {
    let mut acc: u128 = 1;
    for v in 0..h.t() {
        acc *= rising(m, h.d_in(v));
        acc *= falling(m, h.d_out(v));
        if acc == 0 {
            return 0;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_identities() {
        assert_eq!(rising(3, 0), 1);
        assert_eq!(rising(2, 3), 2 * 3 * 4);
        assert_eq!(falling(3, 2), 6);
        assert_eq!(falling(2, 3), 0);
        assert_eq!(falling(5, 0), 1);
    }

    #[test]
    fn double_edge_weight() {
        // in-degree 2 at the bottom vertex, out-degree 2 at the top:
        // [m]^2 [m]_2; vanishes for m = 1 as a double edge then cannot form.
        let h = OrderedGraph::new(2, [(0, 1), (0, 1)]);
        for m in 1..=6u32 {
            let m128 = m as u128;
            assert_eq!(phi(&h, m), m128 * (m128 + 1) * m128 * (m128 - 1));
        }
    }

    #[test]
    fn path_orderings_from_worked_expansion() {
        let center_first = OrderedGraph::new(3, [(0, 1), (0, 2)]);
        let center_mid = OrderedGraph::new(3, [(0, 1), (1, 2)]);
        let center_last = OrderedGraph::new(3, [(0, 2), (1, 2)]);
        for m in 1..=5u32 {
            let m128 = m as u128;
            assert_eq!(phi(&center_first, m), m128.pow(3) * (m128 + 1));
            assert_eq!(phi(&center_mid, m), m128.pow(4));
            assert_eq!(phi(&center_last, m), m128.pow(3) * (m128 - 1));
        }
    }

    #[test]
    fn out_degree_above_m_gives_zero() {
        // center-last path needs out-degree 2 at its top vertex
        let h = OrderedGraph::new(3, [(0, 2), (1, 2)]);
        assert_eq!(phi(&h, 1), 0);
    }
}
