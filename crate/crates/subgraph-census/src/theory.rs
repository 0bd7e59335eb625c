use std::io::Write;

use moment_theory::OrderedGraph;
use pa_core::{generate, GraphConfig};

use crate::{count_ordered_subgraphs, CensusError, VertexWindow};

/// Predicted number of center-first 2-paths: `m(m+1)/2 * n * ln(n)`.
pub fn expected_path2_count(m: u32, n: u32) -> f64 {
    let mf = m as f64;
    mf * (mf + 1.0) / 2.0 * n as f64 * (n as f64).ln()
}

#[derive(Debug, Clone)]
pub struct CensusReport {
    pub pattern: OrderedGraph,
    pub m: u32,
    pub n: u32,
    pub base_seed: u64,
    pub samples: u32,
    pub counts: Vec<u128>,
    pub mean_count: f64,
    pub predicted: f64,
    pub formula: &'static str,
    pub ratio: f64,
}

/// Samples `replicates` graphs and compares the center-first 2-path census
/// against its predicted growth. The pattern argument must be that path
/// (edges `(v1,v2)`, `(v1,v3)`); other patterns have no predicted value
/// wired here.
pub fn census_vs_theory(
    h: &OrderedGraph,
    cfg: &GraphConfig,
    replicates: u32,
) -> Result<CensusReport, CensusError> {
    let center_first = OrderedGraph::new(3, [(0, 1), (0, 2)]);
    if *h != center_first {
        return Err(CensusError::NotCenterFirstPath);
    }
    let mut counts = Vec::with_capacity(replicates as usize);
    for r in 0..replicates as u64 {
        let g = generate(&GraphConfig {
            m: cfg.m,
            n: cfg.n,
            seed: GraphConfig::replicate_seed(cfg.seed, r),
        })?;
        counts.push(count_ordered_subgraphs(&g, h, &VertexWindow::All)?);
    }
    let mean_count = counts.iter().map(|&c| c as f64).sum::<f64>() / replicates.max(1) as f64;
    let predicted = expected_path2_count(cfg.m, cfg.n);
    Ok(CensusReport {
        pattern: h.clone(),
        m: cfg.m,
        n: cfg.n,
        base_seed: cfg.seed,
        samples: replicates,
        counts,
        mean_count,
        predicted,
        formula: "m(m+1)/2 * n * ln n",
        ratio: mean_count / predicted,
    })
}

/// CSV rows `(pattern id, n, m, seed, count, predicted)`.
pub fn write_census_csv<W: Write>(report: &CensusReport, mut w: W) -> std::io::Result<()> {
    writeln!(w, "# pa-lab census v1 formula={}", report.formula)?;
    writeln!(w, "pattern,n,m,seed,count,predicted")?;
    for (r, &count) in report.counts.iter().enumerate() {
        writeln!(
            w,
            "path2-center-first,{},{},{},{},{}",
            report.n,
            report.m,
            GraphConfig::replicate_seed(report.base_seed, r as u64),
            count,
            report.predicted
        )?;
    }
    Ok(())
}
