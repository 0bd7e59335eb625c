use spectra::SpectralMeasure;

use crate::{DensityError, DensityEstimate};

/// L1 distance between the reconstructed density and an empirical spectral
/// measure, after binning both to `bins` equal cells over the estimate's
/// window. Reported as total variation of binned mass (in [0, 2]); atoms
/// outside the window count as unmatched mass.
pub fn compare_density_to_esd(
    est: &DensityEstimate,
    measure: &SpectralMeasure,
    bins: usize,
) -> Result<f64, DensityError> {
    if bins == 0 || est.xs.is_empty() {
        return Err(DensityError::BadParameter("empty grid or zero bins".into()));
    }
    let lo = est.xs[0];
    let hi = *est.xs.last().unwrap();
    let width = (hi - lo) / bins as f64;
    let mut p = vec![0.0f64; bins]; // density mass
    let mut q = vec![0.0f64; bins]; // spectral mass
    for (&x, &v) in est.xs.iter().zip(&est.values) {
        let b = (((x - lo) / width) as usize).min(bins - 1);
        p[b] += v * est.step;
    }
    let atom_weight = 1.0 / measure.len().max(1) as f64;
    let mut outside = 0.0f64;
    for &a in measure.atoms() {
        if a < lo || a > hi {
            outside += atom_weight;
            continue;
        }
        let b = (((a - lo) / width) as usize).min(bins - 1);
        q[b] += atom_weight;
    }
    let l1: f64 = p.iter().zip(&q).map(|(a, b)| (a - b).abs()).sum();
    Ok(l1 + outside)
}
