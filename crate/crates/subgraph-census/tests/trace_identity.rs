//! End-to-end identity: summing walk counts times subgraph counts over
//! every contributing pattern reproduces the closed-walk totals of the
//! whole graph.

use moment_theory::{walk_count_m, OrderedGraph};
use pa_core::{generate, GraphConfig, MultiGraph};
use spectra::{adjacency, trace_power_walks, WalkTrace};
use subgraph_census::{count_ordered_subgraphs, enumerate_walk_patterns, VertexWindow};

fn identity_holds(g: &MultiGraph, k: u32) {
    let patterns = enumerate_walk_patterns(k as usize, k as usize);
    let mut total: u128 = 0;
    for h in &patterns {
        let m_k = walk_count_m(h, k).unwrap();
        if m_k == 0 {
            continue;
        }
        let x = count_ordered_subgraphs(g, h, &VertexWindow::All).unwrap();
        total += m_k * x;
    }
    let walks = trace_power_walks(g, k).unwrap();
    assert_eq!(walks, WalkTrace::Exact(total), "k = {k}");
}

#[test]
fn worked_two_vertex_example_decomposes_as_one_three_plus_two_plus_two() {
    let g = MultiGraph::from_edges(2, 1, [(1, 1), (1, 1), (2, 2), (1, 2)], 2, 0).unwrap();
    let loop1 = OrderedGraph::new(1, [(0, 0)]);
    let loop2 = OrderedGraph::new(1, [(0, 0), (0, 0)]);
    let edge = OrderedGraph::new(2, [(0, 1)]);
    assert_eq!(walk_count_m(&loop1, 2).unwrap(), 1);
    assert_eq!(walk_count_m(&loop2, 2).unwrap(), 2);
    assert_eq!(walk_count_m(&edge, 2).unwrap(), 2);
    let w = VertexWindow::All;
    let sum = 1 * count_ordered_subgraphs(&g, &loop1, &w).unwrap()
        + 2 * count_ordered_subgraphs(&g, &loop2, &w).unwrap()
        + 2 * count_ordered_subgraphs(&g, &edge, &w).unwrap();
    assert_eq!(sum, 7);
    assert_eq!(adjacency(&g).trace(), 3);
    identity_holds(&g, 2);
}

#[test]
fn census_of_loops_equals_adjacency_trace() {
    for seed in 0..5u64 {
        let g = generate(&GraphConfig::new(2, 50, seed).unwrap()).unwrap();
        let loop1 = OrderedGraph::new(1, [(0, 0)]);
        let loops = count_ordered_subgraphs(&g, &loop1, &VertexWindow::All).unwrap();
        assert_eq!(loops as i64, adjacency(&g).trace());
    }
}

#[test]
fn trace_identity_for_k_2_3_4_on_sampled_graphs() {
    for (m, n, seed) in [(1u32, 30u32, 5u64), (2, 40, 6), (3, 25, 7), (2, 40, 8)] {
        let g = generate(&GraphConfig::new(m, n, seed).unwrap()).unwrap();
        for k in 2..=4u32 {
            identity_holds(&g, k);
        }
    }
}
