use std::io::Write;

use crate::SpectraError;

/// Atomic spectral measure: eigenvalues in decreasing order, weight `1/n`
/// each. `scale` records any normalization factor that was applied to the
/// atoms (1.0 when raw).
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralMeasure {
    atoms: Vec<f64>,
    scale: f64,
}

impl SpectralMeasure {
    pub fn new(mut atoms: Vec<f64>, scale: f64) -> Self {
        atoms.sort_by(|a, b| b.partial_cmp(a).unwrap());
        Self { atoms, scale }
    }

    /// Eigenvalues, largest first.
    pub fn atoms(&self) -> &[f64] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Returns a copy with every atom multiplied by `factor`; the factor is
    /// recorded in `scale`.
    pub fn scaled(&self, factor: f64) -> SpectralMeasure {
        SpectralMeasure {
            atoms: self.atoms.iter().map(|a| a * factor).collect(),
            scale: self.scale * factor,
        }
    }

    pub fn sum(&self) -> f64 {
        self.atoms.iter().sum()
    }

    pub fn sum_squares(&self) -> f64 {
        self.atoms.iter().map(|a| a * a).sum()
    }
}

/// k-th moment `(1/n) sum lambda_i^k` of the (possibly scaled) measure.
pub fn esd_moment(measure: &SpectralMeasure, k: u32) -> f64 {
    if measure.is_empty() {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    let s: f64 = measure.atoms.iter().map(|a| a.powi(k as i32)).sum();
    s / measure.len() as f64
}

/// `sup_I |mu(I) - eta(I)|` over all real intervals, computed exactly.
///
/// Any interval selects a consecutive run of the merged atom positions
/// (open/closed endpoints only decide which runs are reachable, and closed
/// intervals already reach every run), so the supremum is the range of the
/// prefix sums of the signed weights.
pub fn interval_distance(mu: &SpectralMeasure, eta: &SpectralMeasure) -> f64 {
    if mu.is_empty() || eta.is_empty() {
        return if mu.is_empty() && eta.is_empty() {
            0.0
        } else {
            1.0
        };
    }
    // Weights over the common denominator na*nb keep the prefix sums in
    // integers, so ties cancel exactly.
    let na = mu.len() as i64;
    let nb = eta.len() as i64;
    let mut pts: Vec<(f64, i64)> = mu
        .atoms
        .iter()
        .map(|&x| (x, nb))
        .chain(eta.atoms.iter().map(|&x| (x, -na)))
        .collect();
    pts.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap());
    let mut prefix = 0i64;
    let mut lo = 0i64;
    let mut hi = 0i64;
    let mut i = 0;
    while i < pts.len() {
        let x = pts[i].0;
        // merge exactly-equal positions: an interval cannot split them
        while i < pts.len() && pts[i].0 == x {
            prefix += pts[i].1;
            i += 1;
        }
        lo = lo.min(prefix);
        hi = hi.max(prefix);
    }
    (hi - lo) as f64 / (na * nb) as f64
}

/// Distance between a full spectrum and the spectrum of a truncation,
/// with both atom counts divided by the full measure's size (the truncated
/// side keeps its deficit as missing mass).
///
/// In this normalization `sup_I |count_full(I) - count_trunc(I)| / n` is
/// bounded by `c / n` (c = number of removed rows) as an exact consequence
/// of interlacing: the count of eigenvalues below any threshold changes by
/// between 0 and c when c rows and columns are deleted. The
/// probability-normalized `interval_distance` does not obey that bound
/// (the 1/(n-c) reweighting inflates it by up to 1/(1-c/n)), so the
/// truncation checks use this function.
pub fn truncation_distance(full: &SpectralMeasure, trunc: &SpectralMeasure) -> f64 {
    if full.is_empty() {
        return 0.0;
    }
    let mut pts: Vec<(f64, i64)> = full
        .atoms
        .iter()
        .map(|&x| (x, 1i64))
        .chain(trunc.atoms.iter().map(|&x| (x, -1i64)))
        .collect();
    pts.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap());
    let mut prefix = 0i64;
    let mut lo = 0i64;
    let mut hi = 0i64;
    let mut i = 0;
    while i < pts.len() {
        let x = pts[i].0;
        while i < pts.len() && pts[i].0 == x {
            prefix += pts[i].1;
            i += 1;
        }
        lo = lo.min(prefix);
        hi = hi.max(prefix);
    }
    (hi - lo) as f64 / full.len() as f64
}

/// Fixed-width histogram of the atoms.
#[derive(Debug, Clone)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
}

impl Histogram {
    pub fn of(measure: &SpectralMeasure, bins: usize, lo: f64, hi: f64) -> Histogram {
        assert!(bins > 0 && hi > lo);
        let width = (hi - lo) / bins as f64;
        let edges: Vec<f64> = (0..=bins).map(|b| lo + b as f64 * width).collect();
        let mut counts = vec![0u64; bins];
        for &a in measure.atoms() {
            if a < lo || a > hi {
                continue;
            }
            let mut b = ((a - lo) / width) as usize;
            if b == bins {
                b -= 1;
            }
            counts[b] += 1;
        }
        Histogram { edges, counts }
    }
}

/// One eigenvalue per line, preceded by a metadata comment header that
/// records the normalization.
pub fn write_eigenvalues_csv<W: Write>(
    measure: &SpectralMeasure,
    meta: &str,
    mut w: W,
) -> Result<(), SpectraError> {
    writeln!(
        w,
        "# pa-lab eigenvalues v1 scale={} {}",
        measure.scale(),
        meta
    )
    .map_err(io_err)?;
    writeln!(w, "eigenvalue").map_err(io_err)?;
    for a in measure.atoms() {
        writeln!(w, "{a}").map_err(io_err)?;
    }
    Ok(())
}

pub fn write_histogram_csv<W: Write>(
    hist: &Histogram,
    meta: &str,
    mut w: W,
) -> Result<(), SpectraError> {
    writeln!(w, "# pa-lab histogram v1 {}", meta).map_err(io_err)?;
    writeln!(w, "bin_lo,bin_hi,count").map_err(io_err)?;
    for (i, c) in hist.counts.iter().enumerate() {
        writeln!(w, "{},{},{}", hist.edges[i], hist.edges[i + 1], c).map_err(io_err)?;
    }
    Ok(())
}

fn io_err(e: std::io::Error) -> SpectraError {
    SpectraError::Eigen(format!("io: {e}"))
}
