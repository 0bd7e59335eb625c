use num_rational::BigRational;

use crate::{enumerate_process, labeled_probability_exact, LabeledGraph, ProbError};

#[derive(Debug)]
pub struct NegativeCorrelationReport {
    pub n: u32,
    pub pairs_checked: u64,
    pub violations: Vec<(LabeledGraph, LabeledGraph)>,
}

impl NegativeCorrelationReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `P[H1 u H2] <= P[H1] P[H2]` for every pair of vertex-disjoint
/// non-empty labeled graphs in the size-`n` process, in exact rationals.
/// Probabilities come from the closed formula, which the atlas oracle pins
/// down elsewhere; the atlas itself is only used to bound enumeration.
pub fn check_negative_correlation(n: u32) -> Result<NegativeCorrelationReport, ProbError> {
    if n > 6 {
        return Err(ProbError::AtlasCap(n, 6));
    }
    // Materialize the atlas once so the marginals below are cheap sums.
    let atlas = enumerate_process(n)?;
    let graphs = all_labeled_graphs(n);
    let probs: Vec<BigRational> = graphs.iter().map(|g| atlas.marginal(g)).collect();
    for (g, p) in graphs.iter().zip(&probs) {
        debug_assert_eq!(p, &labeled_probability_exact(g, n).unwrap());
    }
    let masks: Vec<u64> = graphs
        .iter()
        .map(|g| g.vertex_set().iter().fold(0u64, |acc, &v| acc | (1 << v)))
        .collect();
    let mut pairs_checked = 0u64;
    let mut violations = Vec::new();
    for a in 0..graphs.len() {
        for b in a..graphs.len() {
            if masks[a] & masks[b] != 0 {
                continue;
            }
            let union = graphs[a]
                .union(&graphs[b])
                .expect("disjoint union is valid");
            let pu = atlas.marginal(&union);
            pairs_checked += 1;
            if pu > &probs[a] * &probs[b] {
                violations.push((graphs[a].clone(), graphs[b].clone()));
            }
        }
    }
    Ok(NegativeCorrelationReport {
        n,
        pairs_checked,
        violations,
    })
}

/// All non-empty labeled graphs in the size-`n` process: one optional
/// out-edge per vertex.
fn all_labeled_graphs(n: u32) -> Vec<LabeledGraph> {
    let mut result = Vec::new();
    let mut stack: Vec<(u32, Vec<(u32, u32)>)> = vec![(1, Vec::new())];
    while let Some((j, edges)) = stack.pop() {
        if j > n {
            if !edges.is_empty() {
                result.push(LabeledGraph::new(edges).unwrap());
            }
            continue;
        }
        stack.push((j + 1, edges.clone()));
        for i in 1..=j {
            let mut e = edges.clone();
            e.push((i, j));
            stack.push((j + 1, e));
        }
    }
    result
}
