//! Acceptance suite: every criterion below prints one `ACCEPTANCE ...`
//! line and fails loudly if its pinned tolerance is violated. Run with
//! `cargo test -p harness-cli --test acceptance -- --nocapture` to see the
//! lines; the suite is part of the default workspace test run.

use exact_prob::{enumerate_process, labeled_probability_exact, LabeledGraph};
use moment_theory::{
    build_moment_table, check_hamburger, enumerate_labeled_trees, limit_moment_c, moon_count, psi,
    tree_walk_closed_form, walk_count_m, OrderedGraph,
};
use pa_core::{generate, truncate, GraphConfig, MultiGraph, TruncationSpec};
use spectra::{
    adjacency, eigenvalues, esd_moment, interval_distance, trace_powers, truncation_distance,
};

fn pa(m: u32, n: u32, seed: u64) -> MultiGraph {
    generate(&GraphConfig::new(m, n, seed).unwrap()).unwrap()
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

fn median(xs: &mut Vec<f64>) -> f64 {
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        0.5 * (xs[n / 2 - 1] + xs[n / 2])
    }
}

// ----------------------------------------------------------------------
// 1. Exact-probability oracle: formula vs exhaustive enumeration, all
//    labeled graphs with <= 3 edges, n <= 7, exact rationals.
// ----------------------------------------------------------------------
#[test]
fn criterion_01_exact_probability_oracle() {
    let start = std::time::Instant::now();
    let mut compared = 0u64;
    for n in 1..=7u32 {
        let atlas = enumerate_process(n).unwrap();
        let mut edges = Vec::new();
        for j in 1..=n {
            for i in 1..=j {
                edges.push((i, j));
            }
        }
        let mut chosen: Vec<(u32, u32)> = Vec::new();
        let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
        // iterative enumeration of subsets of size <= 3
        fn rec(
            edges: &[(u32, u32)],
            from: usize,
            chosen: &mut Vec<(u32, u32)>,
            atlas: &exact_prob::ProcessAtlas,
            n: u32,
            compared: &mut u64,
        ) {
            if !chosen.is_empty() {
                if let Ok(s) = LabeledGraph::new(chosen.iter().copied()) {
                    let lhs = atlas.marginal(&s);
                    let rhs = labeled_probability_exact(&s, n).unwrap();
                    assert_eq!(lhs, rhs, "n = {n}, S = {chosen:?}");
                    *compared += 1;
                }
            }
            if chosen.len() == 3 {
                return;
            }
            for idx in from..edges.len() {
                chosen.push(edges[idx]);
                rec(edges, idx + 1, chosen, atlas, n, compared);
                chosen.pop();
            }
        }
        rec(&edges, 0, &mut chosen, &atlas, n, &mut compared);
        let _ = &mut stack;
    }
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 30.0, "oracle suite took {secs:.1}s, budget 30s");
    println!(
        "ACCEPTANCE 01 exact-probability oracle PASS: {compared} graphs, exact match, {secs:.1}s"
    );
}

// ----------------------------------------------------------------------
// 2. Trace/walk identity on 50 random samples with n <= 300, k <= 8, and
//    the worked 2-vertex example.
// ----------------------------------------------------------------------
#[test]
fn criterion_02_trace_walk_identity() {
    let worked = MultiGraph::from_edges(2, 1, [(1, 1), (1, 1), (2, 2), (1, 2)], 2, 0).unwrap();
    let tr2 = trace_powers(&worked, 2).unwrap()[1].to_f64();
    assert_eq!(tr2, 7.0, "worked example Tr(A^2)");

    let mut worst: f64 = 0.0;
    for sample in 0..50u64 {
        let n = 30 + (sample * 67) % 271; // spread through [30, 300]
        let m = 1 + (sample % 4) as u32;
        let g = pa(m, n as u32, 9000 + sample);
        let measure = eigenvalues(&adjacency(&g)).unwrap();
        let traces = trace_powers(&g, 8).unwrap();
        for k in 1..=8u32 {
            let eig = esd_moment(&measure, k) * measure.len() as f64;
            let walk = traces[k as usize - 1].to_f64();
            let rel = (eig - walk).abs() / walk.abs().max(1.0);
            worst = worst.max(rel);
            assert!(
                rel <= 1e-8,
                "sample {sample} k={k}: eig {eig} vs walk {walk} (rel {rel:e})"
            );
        }
    }
    println!("ACCEPTANCE 02 trace/walk identity PASS: 50 samples, worst rel err {worst:.2e}");
}

// ----------------------------------------------------------------------
// 3. Walk-count closed form for every labeled tree with <= 6 edges, and
//    degree-sequence counts vs enumeration for t <= 8.
// ----------------------------------------------------------------------
#[test]
fn criterion_03_walk_closed_form_and_moon() {
    use std::collections::HashMap;
    let mut class_value: HashMap<Vec<u8>, u128> = HashMap::new();
    let mut trees_checked = 0u64;
    for t in 2..=7usize {
        for tree in enumerate_labeled_trees(t).unwrap() {
            let k = tree.num_edges() as u32;
            let code = tree.tree_canonical_code();
            let m2k = match class_value.get(&code) {
                Some(&v) => v,
                None => {
                    let v = walk_count_m(&tree, 2 * k).unwrap();
                    class_value.insert(code, v);
                    v
                }
            };
            assert_eq!(m2k, tree_walk_closed_form(&tree), "{tree:?}");
            trees_checked += 1;
        }
    }
    // the shared-class shortcut is validated by recomputing a spread of
    // trees directly
    for (i, tree) in enumerate_labeled_trees(7).unwrap().into_iter().enumerate() {
        if i % 97 == 0 {
            assert_eq!(
                walk_count_m(&tree, 12).unwrap(),
                tree_walk_closed_form(&tree)
            );
        }
    }

    let mut hist_checked = 0u64;
    for t in 2..=8usize {
        let mut hist: HashMap<Vec<u32>, u128> = HashMap::new();
        for tree in enumerate_labeled_trees(t).unwrap() {
            *hist.entry(tree.degree_sequence()).or_default() += 1;
        }
        for (d, count) in hist {
            assert_eq!(moon_count(&d), count, "t={t} D={d:?}");
            hist_checked += 1;
        }
    }
    println!(
        "ACCEPTANCE 03 walk closed form PASS: {trees_checked} trees exact, \
         {hist_checked} degree sequences match enumeration"
    );
}

// ----------------------------------------------------------------------
// 4. psi/C pipeline: symbolic vs quadrature 1e-8 on 50 random cases,
//    C(2) closed form to 1e-10, Hankel PSD for C(0..8, 0.1, 2).
// ----------------------------------------------------------------------
#[test]
fn criterion_04_psi_and_moment_pipeline() {
    // deterministic pseudo-random case list
    let mut state = 0x1234_5678_9ABC_DEF0u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut worst: f64 = 0.0;
    for _case in 0..50 {
        let t = 2 + (next() % 5) as usize; // 2..=6
        let mut d = vec![1u32; t];
        for _ in 0..(t - 2) {
            let idx = (next() % t as u64) as usize;
            d[idx] += 1;
        }
        let eps = 0.02 + (next() % 580) as f64 / 1000.0; // 0.02..0.6
        let m = 1 + (next() % 5) as u32;
        let sym = psi(&d, eps, m).unwrap();
        let quad = quadrature_psi(&d, eps, m, 2400);
        let rel = (sym - quad).abs() / quad.abs().max(1e-300);
        worst = worst.max(rel);
        assert!(rel <= 1e-8, "D={d:?} eps={eps} m={m}: rel {rel:e}");
    }

    for &eps in &[0.05f64, 0.1, 0.25] {
        for &m in &[1u32, 2, 5] {
            let closed = 2.0 * m as f64 * (1.0 - eps.sqrt()) / (1.0 + eps.sqrt());
            let pipeline = limit_moment_c(2, eps, m).unwrap();
            let rel = (closed - pipeline).abs() / closed;
            assert!(rel <= 1e-10, "C(2, {eps}, {m}): rel {rel:e}");
        }
    }

    let table = build_moment_table(8, 0.1, 2).unwrap();
    assert!(
        check_hamburger(&table, 8).unwrap(),
        "Hankel matrix of C(0..8, 0.1, 2) not PSD"
    );
    println!(
        "ACCEPTANCE 04 psi/C pipeline PASS: 50 quadrature cases (worst {worst:.2e}), \
         C2 closed form, Hankel PSD"
    );
}

// ----------------------------------------------------------------------
// 5. Interlacing distance at (n=3000, m=3), eps in {0.1, 0.3}, 20 seeds.
// ----------------------------------------------------------------------
#[test]
fn criterion_05_interlacing_distance() {
    let n = 3000u32;
    let mut reported: Vec<(f64, f64, f64)> = Vec::new();
    for seed in 0..20u64 {
        let g = pa(3, n, GraphConfig::replicate_seed(50_000, seed));
        let full = eigenvalues(&adjacency(&g)).unwrap();
        for &eps in &[0.1f64, 0.3] {
            let spec = TruncationSpec::new(eps).unwrap();
            let t = truncate(&g, &spec).unwrap();
            let tm = eigenvalues(&adjacency(&t)).unwrap();
            let cut_fraction = spec.cut_index(n) as f64 / n as f64;
            let d = truncation_distance(&full, &tm);
            assert!(
                d <= cut_fraction + 1e-12,
                "seed {seed} eps {eps}: distance {d} above {cut_fraction}"
            );
            reported.push((eps, d, interval_distance(&full, &tm)));
        }
    }
    let max01 = reported
        .iter()
        .filter(|r| r.0 == 0.1)
        .map(|r| r.1)
        .fold(0.0f64, f64::max);
    let max03 = reported
        .iter()
        .filter(|r| r.0 == 0.3)
        .map(|r| r.1)
        .fold(0.0f64, f64::max);
    println!(
        "ACCEPTANCE 05 interlacing distance PASS: 20 seeds, max dist {max01:.4} (eps 0.1) \
         / {max03:.4} (eps 0.3), bound saturated as expected"
    );
}

// ----------------------------------------------------------------------
// 6. Moment asymptotics: k=2 within 5% of 2m (n=1e5, m=3, 20 seeds),
//    k=4 within 30% of 2m(m+1) ln n (n=1e6, m=2, 10 seeds), odd moments
//    at least 100x below C2 at n=1e6.
// ----------------------------------------------------------------------
#[test]
fn criterion_06_moment_asymptotics() {
    let mut second = Vec::new();
    for seed in 0..20u64 {
        let g = pa(3, 100_000, GraphConfig::replicate_seed(61_000, seed));
        let traces = trace_powers(&g, 2).unwrap();
        second.push(traces[1].to_f64() / g.num_vertices() as f64);
    }
    let ratio2 = mean(&second) / 6.0;
    assert!(
        (ratio2 - 1.0).abs() <= 0.05,
        "k=2 ratio {ratio2} outside 5% of 2m"
    );

    let n4 = 1_000_000u32;
    let theory4 = 2.0 * 2.0 * 3.0 * (n4 as f64).ln();
    let mut first = Vec::new();
    let mut third = Vec::new();
    let mut fourth = Vec::new();
    for seed in 0..10u64 {
        let g = pa(2, n4, GraphConfig::replicate_seed(62_000, seed));
        let traces = trace_powers(&g, 4).unwrap();
        let nv = g.num_vertices() as f64;
        first.push(traces[0].to_f64() / nv);
        third.push(traces[2].to_f64() / nv);
        fourth.push(traces[3].to_f64() / nv);
    }
    let ratio4 = mean(&fourth) / theory4;
    assert!(
        (ratio4 - 1.0).abs() <= 0.30,
        "k=4 ratio {ratio4} outside 30% of 2m(m+1) ln n"
    );
    let c2 = 4.0; // 2m at m = 2
    let odd = mean(&first).abs().max(mean(&third).abs());
    assert!(odd <= c2 / 100.0, "mean odd moment {odd} above C2/100");
    println!(
        "ACCEPTANCE 06 moment asymptotics PASS: k=2 ratio {ratio2:.4}, \
         k=4 ratio {ratio4:.4}, odd/C2 = {:.2e}",
        odd / c2
    );
}

// ----------------------------------------------------------------------
// 7. Truncated convergence at (eps=0.1, m=2, n=2e5, 20 seeds): k=2 within
//    5% of C(2,0.1,2), k=4 within 15% of C(4,0.1,2).
// ----------------------------------------------------------------------
#[test]
fn criterion_07_truncated_convergence() {
    let c2 = limit_moment_c(2, 0.1, 2).unwrap();
    let c4 = limit_moment_c(4, 0.1, 2).unwrap();
    let spec = TruncationSpec::new(0.1).unwrap();
    let mut m2 = Vec::new();
    let mut m4 = Vec::new();
    for seed in 0..20u64 {
        let g = pa(2, 200_000, GraphConfig::replicate_seed(70_000, seed));
        let t = truncate(&g, &spec).unwrap();
        let traces = trace_powers(&t, 4).unwrap();
        let nv = t.num_vertices() as f64;
        m2.push(traces[1].to_f64() / nv);
        m4.push(traces[3].to_f64() / nv);
    }
    let r2 = mean(&m2) / c2;
    let r4 = mean(&m4) / c4;
    assert!((r2 - 1.0).abs() <= 0.05, "k=2 ratio {r2} vs C2 {c2}");
    assert!((r4 - 1.0).abs() <= 0.15, "k=4 ratio {r4} vs C4 {c4}");
    println!(
        "ACCEPTANCE 07 truncated convergence PASS: k=2 ratio {r2:.4} (C2 {c2:.5}), \
         k=4 ratio {r4:.4} (C4 {c4:.4})"
    );
}

// ----------------------------------------------------------------------
// 8. Census: mean 2-path count over m(m+1)/2 n ln n within [0.8, 1.2] at
//    n=1e6, m=2, 10 seeds.
// ----------------------------------------------------------------------
#[test]
fn criterion_08_census() {
    let h1 = OrderedGraph::new(3, [(0, 1), (0, 2)]);
    let cfg = GraphConfig::new(2, 1_000_000, 80_000).unwrap();
    let report = subgraph_census::census_vs_theory(&h1, &cfg, 10).unwrap();
    assert!(
        report.ratio >= 0.8 && report.ratio <= 1.2,
        "census ratio {} outside [0.8, 1.2]",
        report.ratio
    );
    println!(
        "ACCEPTANCE 08 census PASS: mean count {:.3e}, predicted {:.3e}, ratio {:.4}",
        report.mean_count, report.predicted, report.ratio
    );
}

// ----------------------------------------------------------------------
// 9. Edge law: lambda_i / sqrt(Delta_i) in [0.85, 1.15] for i <= 5 at
//    n=5e4, m=5 in >= 9/10 seeds; median deviation shrinks as n quadruples.
// ----------------------------------------------------------------------
#[test]
fn criterion_09_edge_law() {
    let mut seeds_in_band = 0;
    let mut top_ratios = Vec::new();
    let mut per_index_out = [0u32; 5];
    for seed in 0..10u64 {
        let g = pa(5, 50_000, GraphConfig::replicate_seed(90_000, seed));
        let rows = edge_localize::edge_law_report(&g, 5).unwrap();
        top_ratios.push(rows[0].ratio);
        for r in &rows {
            if !(0.85..=1.15).contains(&r.ratio) {
                per_index_out[r.i - 1] += 1;
            }
        }
        if rows.iter().all(|r| (0.85..=1.15).contains(&r.ratio)) {
            seeds_in_band += 1;
        }
    }

    let mut med_dev = Vec::new();
    for &n in &[10_000u32, 40_000, 160_000] {
        let mut devs = Vec::new();
        for seed in 0..10u64 {
            let g = pa(5, n, GraphConfig::replicate_seed(91_000, seed));
            for row in edge_localize::edge_law_report(&g, 5).unwrap() {
                devs.push(row.ratio);
            }
        }
        let med = median(&mut devs);
        med_dev.push((n, med, (med - 1.0).abs()));
    }
    let trend_ok = med_dev[1].2 <= med_dev[0].2 && med_dev[2].2 <= med_dev[1].2;

    println!(
        "ACCEPTANCE 09 edge law: {seeds_in_band}/10 seeds with all five ratios in \
         [0.85,1.15] (out-of-band counts by index: {per_index_out:?}; \
         lambda_1/sqrt(Delta_1) per seed: {:?}); median ratios \
         {:.4} -> {:.4} -> {:.4} as n quadruples (trend toward 1: {trend_ok})",
        top_ratios
            .iter()
            .map(|r| (r * 1000.0).round() / 1000.0)
            .collect::<Vec<_>>(),
        med_dev[0].1,
        med_dev[1].1,
        med_dev[2].1
    );
    assert!(
        trend_ok,
        "median ratio deviation not shrinking: {med_dev:?}"
    );
    // Asserted at the stated tolerance. Under the multigraph adjacency
    // (the convention the Tr(A^2) = 7 example fixes) the top eigenvalue
    // sits 16-23% above sqrt(Delta_1) at this scale: the old core's
    // parallel edges ride on top of the hub star, and that excess decays
    // only like n^(-3/25). A 0/1 adjacency would land inside the band,
    // but it is not the object whose moments the rest of this suite
    // verifies.
    assert!(
        seeds_in_band >= 9,
        "only {seeds_in_band}/10 seeds inside the ratio band \
         (top-ratio range {:.3}..{:.3})",
        top_ratios.iter().cloned().fold(f64::INFINITY, f64::min),
        top_ratios.iter().cloned().fold(0.0f64, f64::max),
    );
}

// ----------------------------------------------------------------------
// 10. Localization at n=5e4, m=5: ||v1||_inf in [0.60, 0.78], second
//     coordinate <= 0.2 in >= 9/10 seeds; Weyl sandwich and degree
//     identity hard-asserted on every sample.
// ----------------------------------------------------------------------
#[test]
fn criterion_10_localization() {
    let mut seeds_in_band = 0;
    let mut linfs = Vec::new();
    let mut argmax_on_hub = [0u32; 3];
    for seed in 0..10u64 {
        let g = pa(5, 50_000, GraphConfig::replicate_seed(100_000, seed));
        let loc = edge_localize::localization_report(&g, 3).unwrap();
        let row = &loc[0];
        linfs.push(row.linf);
        if (0.60..=0.78).contains(&row.linf) && row.second_largest <= 0.2 {
            seeds_in_band += 1;
        }
        for (i, r) in loc.iter().enumerate() {
            if r.argmax_vertex == r.hub_vertex {
                argmax_on_hub[i] += 1;
            }
        }
        let params = edge_localize::DecompositionParams::defaults(g.n());
        let dec = edge_localize::decompose(&g, params).unwrap();
        let rep = edge_localize::decomposition_report(&g, &dec).unwrap();
        assert!(rep.weyl_sandwich_holds, "seed {seed}: Weyl sandwich failed");
        assert!(
            rep.degree_identity_holds,
            "seed {seed}: degree identity failed"
        );
        assert!(rep.star_structure_holds, "seed {seed}: G4 not a star union");
    }
    assert!(
        seeds_in_band >= 9,
        "only {seeds_in_band}/10 seeds localized; linf values {linfs:?}"
    );
    println!(
        "ACCEPTANCE 10 localization PASS: {seeds_in_band}/10 seeds in band, \
         linf range [{:.3}, {:.3}], hard identities on all seeds, \
         eigenvector argmax on the matching hub in {argmax_on_hub:?} of 10 seeds (i = 1..3)",
        linfs.iter().cloned().fold(f64::INFINITY, f64::min),
        linfs.iter().cloned().fold(0.0f64, f64::max)
    );
}

// ----------------------------------------------------------------------
// 11. Reconstruction sanity: Gaussian round trip L1 <= 0.05; figure-style
//     run (eps=0.1, m=15, K=6, n=4000) completes with its ESD distance
//     recorded against the repository baseline.
// ----------------------------------------------------------------------
#[test]
fn criterion_11_reconstruction() {
    let est =
        density_recon::reconstruct_density(&[1.0, 0.0, 1.0, 0.0, 3.0], 4.0, 2048, 0.1).unwrap();
    let l1: f64 = est
        .xs
        .iter()
        .zip(&est.values)
        .map(|(&x, &v)| {
            let phi = (-x * x / 2.0).exp() / (2.0 * std::f64::consts::PI).sqrt();
            (v - phi).abs()
        })
        .sum::<f64>()
        * est.step;
    assert!(l1 <= 0.05, "Gaussian round trip L1 = {l1}");

    // figure-style run
    let table = build_moment_table(6, 0.1, 15).unwrap();
    let scaled: Vec<f64> = table
        .moments
        .iter()
        .enumerate()
        .map(|(k, &c)| c / 15.0f64.powf(k as f64 / 2.0))
        .collect();
    let sigma = density_recon::default_sigma(&scaled);
    let window = density_recon::default_l(&scaled);
    let est = density_recon::reconstruct_density(&scaled, window, 2048, sigma).unwrap();
    let g = pa(15, 4000, 110_000);
    let t = truncate(&g, &TruncationSpec::new(0.1).unwrap()).unwrap();
    let measure = eigenvalues(&adjacency(&t))
        .unwrap()
        .scaled(1.0 / 15.0f64.sqrt());
    let dist = density_recon::compare_density_to_esd(&est, &measure, 60).unwrap();
    // regression baseline from the first recorded run of this seed
    const BASELINE: f64 = 0.0513;
    assert!(
        (dist - BASELINE).abs() <= 0.02,
        "figure-style ESD distance {dist} drifted from baseline {BASELINE}"
    );
    println!(
        "ACCEPTANCE 11 reconstruction PASS: Gaussian L1 {l1:.4}, figure-style ESD L1 {dist:.4} \
         (baseline {BASELINE})"
    );
}

// ------------------------------------------------------------------ oracle

/// Independent nested cumulative quadrature on a geometric Gauss-Lobatto
/// mesh (same construction as the moment-theory test oracle).
fn quadrature_psi(degrees: &[u32], eps: f64, m: u32, cells: usize) -> f64 {
    const NODES: [f64; 5] = [-1.0, -0.654653670707977, 0.0, 0.654653670707977, 1.0];
    // cumulative integrals of the Lagrange basis over the nodes
    let mut cum = [[0.0f64; 5]; 5];
    for j in 0..5 {
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
        // gaussian elimination
        for col in 0..5 {
            let piv = (col..5)
                .max_by(|&i, &k| a[i][col].abs().partial_cmp(&a[k][col].abs()).unwrap())
                .unwrap();
            a.swap(col, piv);
            rhs.swap(col, piv);
            for row in (col + 1)..5 {
                let f = a[row][col] / a[col][col];
                for c in col..5 {
                    a[row][c] -= f * a[col][c];
                }
                rhs[row] -= f * rhs[col];
            }
        }
        let mut coeff = [0.0f64; 5];
        for row in (0..5).rev() {
            let mut acc = rhs[row];
            for c in (row + 1)..5 {
                acc -= a[row][c] * coeff[c];
            }
            coeff[row] = acc / a[row][row];
        }
        for (k, &xk) in NODES.iter().enumerate() {
            let mut acc = 0.0;
            for (c, &co) in coeff.iter().enumerate() {
                let e = (c + 1) as i32;
                acc += co * (xk.powi(e) - (-1.0f64).powi(e)) / e as f64;
            }
            cum[k][j] = acc;
        }
    }
    let mut bounds = Vec::with_capacity(cells + 1);
    for i in 0..=cells {
        bounds.push(eps * (1.0 / eps).powf(i as f64 / cells as f64));
    }
    let mut g = vec![[1.0f64; 5]; cells];
    for &d in degrees {
        let mut next = vec![[0.0f64; 5]; cells];
        let mut running = 0.0f64;
        for cell in 0..cells {
            let (lo, hi) = (bounds[cell], bounds[cell + 1]);
            let half = 0.5 * (hi - lo);
            let mut h = [0.0f64; 5];
            for k in 0..5 {
                let y = 0.5 * (lo + hi) + half * NODES[k];
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
