//! Independent numeric oracle for the iterated simplex integrals: a graded
//! Gauss-Lobatto grid on [eps, 1] carries each nested cumulative integral,
//! per-cell through the exact integral of the degree-4 interpolant. No
//! symbolic machinery is shared with the implementation under test.

use moment_theory::psi;
use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;

/// Gauss-Lobatto nodes on [-1, 1].
const NODES: [f64; 5] = [-1.0, -0.654653670707977, 0.0, 0.654653670707977, 1.0];

/// `CUM[k][j]`: integral of the j-th Lagrange basis polynomial (over the
/// nodes above) from -1 to node k. Computed on the fly from monomial
/// coefficients obtained by solving the 5x5 Vandermonde system.
fn cumulative_matrix() -> [[f64; 5]; 5] {
    let mut cum = [[0.0f64; 5]; 5];
    for j in 0..5 {
        // coefficients of the basis polynomial l_j via Vandermonde solve
        let mut a = [[0.0f64; 5]; 5];
        let mut rhs = [0.0f64; 5];
        for (r, &x) in NODES.iter().enumerate() {
            let mut p = 1.0;
            for c in 0..5 {
                a[r][c] = p;
                p *= x;
            }
            rhs[r] = if r == j { 1.0 } else { 0.0 };
        }
        let coeff = solve5(&mut a, &mut rhs);
        for (k, &xk) in NODES.iter().enumerate() {
            // integral of sum coeff_c x^c from -1 to xk
            let mut acc = 0.0;
            for (c, &co) in coeff.iter().enumerate() {
                let e = (c + 1) as f64;
                acc += co * (xk.powi(c as i32 + 1) - (-1.0f64).powi(c as i32 + 1)) / e;
            }
            cum[k][j] = acc;
        }
    }
    cum
}

fn solve5(a: &mut [[f64; 5]; 5], b: &mut [f64; 5]) -> [f64; 5] {
    for col in 0..5 {
        let piv = (col..5)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
        a.swap(col, piv);
        b.swap(col, piv);
        for row in (col + 1)..5 {
            let f = a[row][col] / a[col][col];
            for c in col..5 {
                a[row][c] -= f * a[col][c];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = [0.0f64; 5];
    for row in (0..5).rev() {
        let mut acc = b[row];
        for c in (row + 1)..5 {
            acc -= a[row][c] * x[c];
        }
        x[row] = acc / a[row][row];
    }
    x
}

/// Numeric psi by nested cumulative quadrature on a geometric mesh.
fn psi_quadrature(degrees: &[u32], eps: f64, m: u32, cells: usize) -> f64 {
    let cum = cumulative_matrix();
    // geometric cell boundaries eps * (1/eps)^(i/cells)
    let mut bounds = Vec::with_capacity(cells + 1);
    for i in 0..=cells {
        bounds.push(eps * (1.0 / eps).powf(i as f64 / cells as f64));
    }
    // grid of nodes: per cell, 5 Lobatto points (ends shared but stored per cell)
    let point = |cell: usize, k: usize| -> f64 {
        let (lo, hi) = (bounds[cell], bounds[cell + 1]);
        0.5 * (lo + hi) + 0.5 * (hi - lo) * NODES[k]
    };
    // g holds values of the current inner integral at every node; starts at 1
    let mut g = vec![[1.0f64; 5]; cells];
    for &d in degrees {
        // h = g * y^{-d/2}; then cumulative integral from eps
        let mut next = vec![[0.0f64; 5]; cells];
        let mut running = 0.0f64;
        for cell in 0..cells {
            let half = 0.5 * (bounds[cell + 1] - bounds[cell]);
            let mut h = [0.0f64; 5];
            for k in 0..5 {
                let y = point(cell, k);
                h[k] = g[cell][k] * y.powf(-(d as f64) / 2.0);
            }
            for k in 0..5 {
                let mut acc = 0.0;
                for j in 0..5 {
                    acc += cum[k][j] * h[j];
                }
                next[cell][k] = running + half * acc;
            }
            running = next[cell][4];
        }
        g = next;
    }
    g[cells - 1][4] / (2.0 * m as f64).powi(degrees.len() as i32 - 1)
}

fn random_degree_sequence(rng: &mut Pcg64, t: usize) -> Vec<u32> {
    // positive integers summing to 2(t-1)
    let mut d = vec![1u32; t];
    let mut extra = t as u32 - 2;
    while extra > 0 {
        let idx = rng.gen_range(0..t);
        d[idx] += 1;
        extra -= 1;
    }
    d
}

#[test]
fn symbolic_psi_matches_quadrature_on_random_cases() {
    let mut rng = Pcg64::seed_from_u64(0xF00D);
    let mut checked = 0;
    while checked < 50 {
        let t = rng.gen_range(2..=6usize);
        let d = random_degree_sequence(&mut rng, t);
        let eps = rng.gen_range(0.02..0.6f64);
        let m = rng.gen_range(1..=5u32);
        let sym = psi(&d, eps, m).unwrap();
        let quad = psi_quadrature(&d, eps, m, 2000);
        let quad_refined = psi_quadrature(&d, eps, m, 3000);
        // the mesh itself must have converged
        assert!(
            (quad - quad_refined).abs() <= 1e-10 * quad.abs().max(1e-12),
            "quadrature not converged for D={d:?} eps={eps}"
        );
        let rel = (sym - quad).abs() / quad.abs().max(1e-300);
        assert!(
            rel <= 1e-8,
            "D={d:?} eps={eps:.4} m={m}: symbolic {sym:e} vs quadrature {quad:e} (rel {rel:e})"
        );
        checked += 1;
    }
}

#[test]
fn specific_case_from_the_worked_moment() {
    let sym = psi(&[2, 1, 1], 0.25, 1).unwrap();
    let quad = psi_quadrature(&[2, 1, 1], 0.25, 1, 2500);
    assert!((sym - quad).abs() / quad <= 1e-10, "{sym} vs {quad}");
}
