use std::io::Write;

use crate::DensityError;

/// Density samples on a symmetric uniform grid.
#[derive(Debug, Clone)]
pub struct DensityEstimate {
    pub xs: Vec<f64>,
    pub values: Vec<f64>,
    pub step: f64,
    pub sigma: f64,
    pub moments_used: usize,
    /// Set when the damped exponent fails to stay negligible beyond the
    /// integration window; carries a workable sigma.
    pub warning: Option<String>,
}

impl DensityEstimate {
    pub fn mass(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.step
    }

    pub fn moment(&self, k: u32) -> f64 {
        self.xs
            .iter()
            .zip(&self.values)
            .map(|(x, v)| x.powi(k as i32) * v)
            .sum::<f64>()
            * self.step
    }
}

/// `0.15 sqrt(C2)` unless the table is degenerate.
pub fn default_sigma(moments: &[f64]) -> f64 {
    let c2 = moments.get(2).copied().unwrap_or(0.0).max(1e-12);
    0.15 * c2.sqrt()
}

/// `4 sqrt(C2)` window half-width.
pub fn default_l(moments: &[f64]) -> f64 {
    let c2 = moments.get(2).copied().unwrap_or(0.0).max(1e-12);
    (4.0 * c2.sqrt()).max(1.0)
}

pub fn default_gridsize() -> usize {
    2048
}

/// Cumulants from raw moments via
/// `kappa_n = m_n - sum_{j<n} C(n-1, j-1) kappa_j m_{n-j}`.
pub fn moments_to_cumulants(moments: &[f64]) -> Vec<f64> {
    let n = moments.len();
    let mut kappa = vec![0.0f64; n];
    for order in 1..n {
        let mut acc = moments[order];
        for j in 1..order {
            acc -= binomial(order - 1, j - 1) * kappa[j] * moments[order - j];
        }
        kappa[order] = acc;
    }
    kappa
}

fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Reconstructs a density on `[-l, l]` from symmetric moments
/// `C_0 ..= C_K`.
pub fn reconstruct_density(
    moments: &[f64],
    l: f64,
    gridsize: usize,
    sigma: f64,
) -> Result<DensityEstimate, DensityError> {
    if moments.len() < 3 {
        return Err(DensityError::TooFewMoments);
    }
    if moments.iter().any(|m| !m.is_finite()) {
        return Err(DensityError::NonFinite);
    }
    if (moments[0] - 1.0).abs() > 1e-9 {
        return Err(DensityError::BadMass(moments[0]));
    }
    for (k, &m) in moments.iter().enumerate().skip(1).step_by(2) {
        if m != 0.0 {
            return Err(DensityError::OddMoment(k, m));
        }
    }
    if !(l > 0.0) || gridsize < 8 || !(sigma > 0.0) {
        return Err(DensityError::BadParameter(format!(
            "l = {l}, gridsize = {gridsize}, sigma = {sigma}"
        )));
    }
    let kappa = moments_to_cumulants(moments);
    // real exponent of the damped approximate characteristic function
    let exponent = |t: f64| -> f64 {
        let mut acc = -0.5 * sigma * sigma * t * t;
        let mut fact = 1.0f64;
        for j in 1.. {
            let order = 2 * j;
            if order >= kappa.len() {
                break;
            }
            fact *= ((order - 1) * order) as f64;
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            acc += sign * kappa[order] * t.powi(order as i32) / fact;
        }
        acc
    };

    const CUTOFF: f64 = -42.0; // exp(-42) ~ 5.7e-19
    const TAIL_GUARD: f64 = -37.0;
    let mut warning = None;
    // walk out until the exponent dies; abort into a warning if it will not
    let step = 0.05 / sigma.min(1.0);
    let mut t = step;
    let t_max = loop {
        if exponent(t) < CUTOFF {
            break t;
        }
        if t > 1e5 {
            warning = Some(divergence_warning(&kappa, sigma));
            // best effort: integrate to the minimum of the exponent
            break argmin_exponent(&exponent, 1e5);
        }
        t += step;
    };
    if warning.is_none() {
        // the exponent must stay dead beyond the window
        let mut probe = t_max;
        while probe < 4.0 * t_max {
            if exponent(probe) > TAIL_GUARD {
                warning = Some(divergence_warning(&kappa, sigma));
                break;
            }
            probe += t_max / 64.0;
        }
    }

    // cosine inversion, Simpson rule; enough nodes for the fastest phase
    let n_nodes = {
        let oscillation = (t_max * l / std::f64::consts::PI * 12.0) as usize;
        (oscillation.max(2048) + 1) | 1
    };
    let dt = t_max / (n_nodes - 1) as f64;
    let weights: Vec<f64> = (0..n_nodes)
        .map(|i| {
            if i == 0 || i == n_nodes - 1 {
                1.0
            } else if i % 2 == 1 {
                4.0
            } else {
                2.0
            }
        })
        .collect();
    let phi: Vec<f64> = (0..n_nodes)
        .map(|i| exponent(i as f64 * dt).exp())
        .collect();

    let half = gridsize / 2;
    let hstep = 2.0 * l / (gridsize - 1) as f64;
    let mut xs = vec![0.0f64; gridsize];
    let mut values = vec![0.0f64; gridsize];
    for i in 0..gridsize {
        xs[i] = -l + i as f64 * hstep;
    }
    for i in half..gridsize {
        let x = xs[i];
        let mut acc = 0.0f64;
        for j in 0..n_nodes {
            acc += weights[j] * phi[j] * (x * j as f64 * dt).cos();
        }
        let val = acc * dt / 3.0 / std::f64::consts::PI;
        values[i] = val;
        values[gridsize - 1 - i] = val; // even by construction
    }
    // clip negative lobes, then renormalize
    for v in values.iter_mut() {
        if *v < 0.0 {
            *v = 0.0;
        }
    }
    let mass: f64 = values.iter().sum::<f64>() * hstep;
    if mass > 0.0 {
        for v in values.iter_mut() {
            *v /= mass;
        }
    }
    Ok(DensityEstimate {
        xs,
        values,
        step: hstep,
        sigma,
        moments_used: moments.len() - 1,
        warning,
    })
}

fn argmin_exponent(exponent: &impl Fn(f64) -> f64, hi: f64) -> f64 {
    let mut best_t = 1.0;
    let mut best = exponent(1.0);
    let mut t = 1.0;
    while t < hi {
        let e = exponent(t);
        if e < best {
            best = e;
            best_t = t;
        }
        t *= 1.05;
    }
    best_t
}

fn divergence_warning(kappa: &[f64], sigma: f64) -> String {
    // find a sigma whose damping keeps the exponent below -42 before any
    // positive cumulant term takes over
    let mut s = sigma;
    for _ in 0..60 {
        s *= 1.5;
        let exponent = |t: f64| -> f64 {
            let mut acc = -0.5 * s * s * t * t;
            let mut fact = 1.0f64;
            for j in 1.. {
                let order = 2 * j;
                if order >= kappa.len() {
                    break;
                }
                fact *= ((order - 1) * order) as f64;
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                acc += sign * kappa[order] * t.powi(order as i32) / fact;
            }
            acc
        };
        let mut t = 0.1;
        let mut died = false;
        while t < 1e4 {
            let e = exponent(t);
            if e < -42.0 {
                died = true;
                break;
            }
            if e > 10.0 {
                break;
            }
            t += 0.1;
        }
        if died {
            return format!(
                "characteristic-function tail grows past the damping support; \
                 try sigma >= {s:.3}"
            );
        }
    }
    "characteristic-function tail grows past the damping support".to_string()
}

pub fn write_density_csv<W: Write>(est: &DensityEstimate, mut w: W) -> std::io::Result<()> {
    writeln!(
        w,
        "# pa-lab density v1 sigma={} K={} warning={}",
        est.sigma,
        est.moments_used,
        est.warning.is_some()
    )?;
    writeln!(w, "x,density")?;
    for (x, v) in est.xs.iter().zip(&est.values) {
        writeln!(w, "{x},{v}")?;
    }
    Ok(())
}
