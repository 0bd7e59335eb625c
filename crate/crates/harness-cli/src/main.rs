use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use harness_cli::{run, ExperimentConfig, ExperimentId};

/// Attachment-graph spectra lab: sampling, spectra, moment tables,
/// censuses, density fits and localization experiments, all deterministic
/// in the seed.
#[derive(Parser)]
#[command(name = "pa-lab", version, about)]
struct Cli {
    /// Key-value config file; command-line flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Sample graphs and write edge-list files.
    Generate(CommonArgs),
    /// Full eigenvalue spectra and histograms.
    Spectrum(SpectrumArgs),
    /// Empirical spectral moments vs theory (walk counting, no eigensolve).
    Moments(MomentsArgs),
    /// Truncated-graph moments vs the limiting moment table.
    TruncateCompare(MomentsArgs),
    /// Ordered 2-path census vs its predicted growth.
    Census(CommonArgs),
    /// Density reconstruction from the moment table, with one empirical
    /// spectrum for comparison.
    Reconstruct(ReconstructArgs),
    /// Leading eigenvalues against square-root degrees.
    Edge(TopArgs),
    /// Eigenvector localization and the star decomposition.
    Localize(TopArgs),
    /// Exact-probability oracle suite.
    VerifyProb(VerifyArgs),
}

#[derive(Args)]
struct CommonArgs {
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    replicates: Option<u32>,
    /// Base seed; replicate r uses base_seed + r.
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory for artifacts.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Eigenvalue normalization: none | figure1 | inv-sqrt-m.
    #[arg(long)]
    normalize: Option<String>,
    /// Histogram bin count.
    #[arg(long)]
    bins: Option<usize>,
}

#[derive(Args)]
struct MomentsArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Highest moment order.
    #[arg(long)]
    kmax: Option<u32>,
    /// Truncation fraction.
    #[arg(long)]
    eps: Option<f64>,
    /// Compare against the truncated-limit table (moments subcommand only).
    #[arg(long)]
    truncated: bool,
}

#[derive(Args)]
struct ReconstructArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long)]
    kmax: Option<u32>,
    #[arg(long)]
    eps: Option<f64>,
    /// Damping width; 0 derives 0.15 sqrt(C2).
    #[arg(long)]
    sigma: Option<f64>,
    /// Window half-width; 0 derives 4 sqrt(C2).
    #[arg(long)]
    window: Option<f64>,
    #[arg(long)]
    gridsize: Option<usize>,
    #[arg(long)]
    bins: Option<usize>,
}

#[derive(Args)]
struct TopArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// How many leading eigenpairs.
    #[arg(long)]
    top_k: Option<u32>,
    /// Star-decomposition threshold overrides (0 = published exponents).
    #[arg(long)]
    threshold_s: Option<u32>,
    #[arg(long)]
    threshold_t: Option<u32>,
    #[arg(long)]
    threshold_k: Option<u32>,
    #[arg(long)]
    threshold_b: Option<u32>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Process size for exhaustive enumeration (<= 8).
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("PA_LAB_THREADS") {
        if let Ok(k) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build_global();
        }
    }
    let cli = Cli::parse();
    match build_config(&cli) {
        Ok(cfg) => match run(&cfg) {
            Ok(summary) => {
                for a in &summary.artifacts {
                    println!("wrote {}", a.display());
                }
                for fail in &summary.failures {
                    eprintln!("replicate failure: {fail}");
                }
                if !summary.report_ok {
                    eprintln!("report checks failed");
                }
                ExitCode::from(summary.exit_code() as u8)
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn build_config(cli: &Cli) -> Result<ExperimentConfig, harness_cli::HarnessError> {
    let file_cfg = match &cli.config {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|source| harness_cli::HarnessError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
            Some(ExperimentConfig::parse(&text)?)
        }
        None => None,
    };
    let mut cfg = match (&cli.command, file_cfg) {
        (Some(cmd), Some(mut cfg)) => {
            cfg.experiment = experiment_of(cmd);
            cfg
        }
        (Some(cmd), None) => ExperimentConfig::new(experiment_of(cmd)),
        (None, Some(cfg)) => cfg,
        (None, None) => {
            return Err(harness_cli::HarnessError::Invalid(
                "no subcommand and no --config file".into(),
            ))
        }
    };
    if let Some(cmd) = &cli.command {
        apply_flags(cmd, &mut cfg)?;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn experiment_of(cmd: &Command) -> ExperimentId {
    match cmd {
        Command::Generate(_) => ExperimentId::Generate,
        Command::Spectrum(_) => ExperimentId::Spectrum,
        Command::Moments(_) => ExperimentId::Moments,
        Command::TruncateCompare(_) => ExperimentId::TruncateCompare,
        Command::Census(_) => ExperimentId::Census,
        Command::Reconstruct(_) => ExperimentId::Reconstruct,
        Command::Edge(_) => ExperimentId::Edge,
        Command::Localize(_) => ExperimentId::Localize,
        Command::VerifyProb(_) => ExperimentId::VerifyProb,
    }
}

fn apply_flags(cmd: &Command, cfg: &mut ExperimentConfig) -> Result<(), harness_cli::HarnessError> {
    let common = |cfg: &mut ExperimentConfig, c: &CommonArgs| {
        if let Some(m) = c.m {
            cfg.m = m;
        }
        if let Some(n) = c.n {
            cfg.n = n;
        }
        if let Some(r) = c.replicates {
            cfg.replicates = r;
        }
        if let Some(s) = c.seed {
            cfg.base_seed = s;
        }
        if let Some(out) = &c.out {
            cfg.output_dir = out.clone();
        }
    };
    match cmd {
        Command::Generate(c) | Command::Census(c) => common(cfg, c),
        Command::Spectrum(a) => {
            common(cfg, &a.common);
            if let Some(nz) = &a.normalize {
                cfg.normalize = nz.parse().map_err(harness_cli::HarnessError::Invalid)?;
            }
            if let Some(b) = a.bins {
                cfg.bins = b;
            }
        }
        Command::Moments(a) | Command::TruncateCompare(a) => {
            common(cfg, &a.common);
            if let Some(k) = a.kmax {
                cfg.kmax = k;
            }
            if let Some(e) = a.eps {
                cfg.epsilon = e;
            }
            if a.truncated {
                cfg.truncated = true;
            }
        }
        Command::Reconstruct(a) => {
            common(cfg, &a.common);
            if let Some(k) = a.kmax {
                cfg.kmax = k;
            }
            if let Some(e) = a.eps {
                cfg.epsilon = e;
            }
            if let Some(s) = a.sigma {
                cfg.sigma = s;
            }
            if let Some(w) = a.window {
                cfg.window_l = w;
            }
            if let Some(g) = a.gridsize {
                cfg.gridsize = g;
            }
            if let Some(b) = a.bins {
                cfg.bins = b;
            }
        }
        Command::Edge(a) | Command::Localize(a) => {
            common(cfg, &a.common);
            if let Some(k) = a.top_k {
                cfg.top_k = k;
            }
            if let Some(v) = a.threshold_s {
                cfg.thresholds.s = v;
            }
            if let Some(v) = a.threshold_t {
                cfg.thresholds.t = v;
            }
            if let Some(v) = a.threshold_k {
                cfg.thresholds.k = v;
            }
            if let Some(v) = a.threshold_b {
                cfg.thresholds.b = v;
            }
        }
        Command::VerifyProb(a) => {
            if let Some(n) = a.n {
                cfg.atlas_n = n;
            }
            if let Some(out) = &a.out {
                cfg.output_dir = out.clone();
            }
        }
    }
    Ok(())
}
