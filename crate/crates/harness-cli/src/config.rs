use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExperimentId {
    Generate,
    Spectrum,
    Moments,
    TruncateCompare,
    Census,
    Reconstruct,
    Edge,
    Localize,
    VerifyProb,
}

impl ExperimentId {
    pub const ALL: [ExperimentId; 9] = [
        ExperimentId::Generate,
        ExperimentId::Spectrum,
        ExperimentId::Moments,
        ExperimentId::TruncateCompare,
        ExperimentId::Census,
        ExperimentId::Reconstruct,
        ExperimentId::Edge,
        ExperimentId::Localize,
        ExperimentId::VerifyProb,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExperimentId::Generate => "generate",
            ExperimentId::Spectrum => "spectrum",
            ExperimentId::Moments => "moments",
            ExperimentId::TruncateCompare => "truncate-compare",
            ExperimentId::Census => "census",
            ExperimentId::Reconstruct => "reconstruct",
            ExperimentId::Edge => "edge",
            ExperimentId::Localize => "localize",
            ExperimentId::VerifyProb => "verify-prob",
        }
    }
}

impl FromStr for ExperimentId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ExperimentId::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| format!("unknown experiment `{s}`"))
    }
}

impl fmt::Display for ExperimentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Eigenvalue normalization applied before export.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Normalize {
    #[default]
    None,
    /// `1 / sqrt(n p (1-p))` with `p = 2m/n`.
    Figure1,
    /// `1 / sqrt(m)`.
    InvSqrtM,
}

impl FromStr for Normalize {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "none" => Ok(Normalize::None),
            "figure1" => Ok(Normalize::Figure1),
            "inv-sqrt-m" => Ok(Normalize::InvSqrtM),
            other => Err(format!("unknown normalization `{other}`")),
        }
    }
}

impl Normalize {
    pub fn name(self) -> &'static str {
        match self {
            Normalize::None => "none",
            Normalize::Figure1 => "figure1",
            Normalize::InvSqrtM => "inv-sqrt-m",
        }
    }

    pub fn factor(self, m: u32, n: u32) -> f64 {
        match self {
            Normalize::None => 1.0,
            Normalize::Figure1 => {
                let p = 2.0 * m as f64 / n as f64;
                1.0 / (n as f64 * p * (1.0 - p)).sqrt()
            }
            Normalize::InvSqrtM => 1.0 / (m as f64).sqrt(),
        }
    }
}

/// Zero means "use the published exponent default".
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ThresholdOverrides {
    pub s: u32,
    pub t: u32,
    pub k: u32,
    pub b: u32,
}

impl ThresholdOverrides {
    pub fn resolve(&self, n: u32) -> edge_localize::DecompositionParams {
        let mut p = edge_localize::DecompositionParams::defaults(n);
        if self.s > 0 {
            p.s = self.s;
        }
        if self.t > 0 {
            p.t_thresh = self.t;
        }
        if self.k > 0 {
            p.k_top = self.k;
        }
        if self.b > 0 {
            p.b = self.b;
        }
        p
    }
}

/// One experiment run, fully determined by these fields plus the binary
/// version. The same config (hence the same `config_hash`) regenerates
/// every artifact byte for byte.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub experiment: ExperimentId,
    pub m: u32,
    pub n: u32,
    pub epsilon: f64,
    pub kmax: u32,
    pub replicates: u32,
    pub base_seed: u64,
    pub output_dir: PathBuf,
    pub normalize: Normalize,
    pub bins: usize,
    /// 0 = derive from the moment table.
    pub sigma: f64,
    /// 0 = derive from the moment table.
    pub window_l: f64,
    pub gridsize: usize,
    pub atlas_n: u32,
    pub top_k: u32,
    pub thresholds: ThresholdOverrides,
    /// `moments` experiment: compare the truncated graph against the
    /// moment table instead of the untruncated asymptotics.
    pub truncated: bool,
}

impl ExperimentConfig {
    pub fn new(experiment: ExperimentId) -> Self {
        Self {
            experiment,
            m: 2,
            n: 1000,
            epsilon: 0.1,
            kmax: 4,
            replicates: 1,
            base_seed: 42,
            output_dir: PathBuf::from("pa-lab-out"),
            normalize: Normalize::None,
            bins: 60,
            sigma: 0.0,
            window_l: 0.0,
            gridsize: 2048,
            atlas_n: 6,
            top_k: 5,
            thresholds: ThresholdOverrides::default(),
            truncated: false,
        }
    }

    /// Canonical key-value rendering; also what the hash covers.
    pub fn canonical(&self) -> String {
        format!(
            "experiment = {}\n\
             m = {}\n\
             n = {}\n\
             epsilon = {}\n\
             kmax = {}\n\
             replicates = {}\n\
             base_seed = {}\n\
             output_dir = {}\n\
             normalize = {}\n\
             bins = {}\n\
             sigma = {}\n\
             window_l = {}\n\
             gridsize = {}\n\
             atlas_n = {}\n\
             top_k = {}\n\
             thresholds.s = {}\n\
             thresholds.t = {}\n\
             thresholds.k = {}\n\
             thresholds.b = {}\n\
             truncated = {}\n",
            self.experiment,
            self.m,
            self.n,
            self.epsilon,
            self.kmax,
            self.replicates,
            self.base_seed,
            self.output_dir.display(),
            self.normalize.name(),
            self.bins,
            self.sigma,
            self.window_l,
            self.gridsize,
            self.atlas_n,
            self.top_k,
            self.thresholds.s,
            self.thresholds.t,
            self.thresholds.k,
            self.thresholds.b,
            self.truncated,
        )
    }

    /// FNV-1a over the canonical form, excluding the output directory so
    /// artifacts can be relocated.
    pub fn hash(&self) -> String {
        let mut acc: u64 = 0xcbf2_9ce4_8422_2325;
        for line in self.canonical().lines() {
            if line.starts_with("output_dir") {
                continue;
            }
            for b in line.bytes().chain([b'\n']) {
                acc ^= b as u64;
                acc = acc.wrapping_mul(0x0000_0100_0000_01B3);
            }
        }
        format!("{acc:016x}")
    }

    /// Parses the key-value config text. Unknown keys and malformed values
    /// are rejected with their line number.
    pub fn parse(text: &str) -> Result<Self, HarnessError> {
        let mut experiment: Option<ExperimentId> = None;
        let mut pairs: Vec<(usize, String, String)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let stripped = raw.split('#').next().unwrap_or("").trim();
            if stripped.is_empty() {
                continue;
            }
            let Some((key, value)) = stripped.split_once('=') else {
                return Err(HarnessError::Config {
                    line,
                    msg: format!("expected `key = value`, got `{stripped}`"),
                });
            };
            let key = key.trim().to_owned();
            let value = value.trim().to_owned();
            if value.is_empty() {
                return Err(HarnessError::Config {
                    line,
                    msg: format!("empty value for `{key}`"),
                });
            }
            if key == "experiment" {
                experiment = Some(
                    value
                        .parse()
                        .map_err(|msg| HarnessError::Config { line, msg })?,
                );
            } else {
                pairs.push((line, key, value));
            }
        }
        let experiment = experiment.ok_or(HarnessError::Config {
            line: 1,
            msg: "missing `experiment = <id>`".into(),
        })?;
        let mut cfg = ExperimentConfig::new(experiment);
        for (line, key, value) in pairs {
            cfg.apply(&key, &value)
                .map_err(|msg| HarnessError::Config { line, msg })?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Applies one `key = value` override.
    pub fn apply(&mut self, key: &str, value: &str) -> Result<(), String> {
        fn num<T: FromStr>(key: &str, value: &str) -> Result<T, String> {
            value
                .parse()
                .map_err(|_| format!("bad value `{value}` for `{key}`"))
        }
        match key {
            "m" => self.m = num(key, value)?,
            "n" => self.n = num(key, value)?,
            "epsilon" => self.epsilon = num(key, value)?,
            "kmax" => self.kmax = num(key, value)?,
            "replicates" => self.replicates = num(key, value)?,
            "base_seed" => self.base_seed = num(key, value)?,
            "output_dir" => self.output_dir = PathBuf::from(value),
            "normalize" => self.normalize = value.parse()?,
            "bins" => self.bins = num(key, value)?,
            "sigma" => self.sigma = num(key, value)?,
            "window_l" => self.window_l = num(key, value)?,
            "gridsize" => self.gridsize = num(key, value)?,
            "atlas_n" => self.atlas_n = num(key, value)?,
            "top_k" => self.top_k = num(key, value)?,
            "thresholds.s" => self.thresholds.s = num(key, value)?,
            "thresholds.t" => self.thresholds.t = num(key, value)?,
            "thresholds.k" => self.thresholds.k = num(key, value)?,
            "thresholds.b" => self.thresholds.b = num(key, value)?,
            "truncated" => self.truncated = num(key, value)?,
            other => return Err(format!("unknown key `{other}`")),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let bad = |msg: String| Err(HarnessError::Invalid(msg));
        if self.m == 0 || self.n == 0 {
            return bad(format!(
                "need m >= 1 and n >= 1, got m={} n={}",
                self.m, self.n
            ));
        }
        if self.replicates == 0 {
            return bad("replicates must be at least 1".into());
        }
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return bad(format!("epsilon must be in (0,1), got {}", self.epsilon));
        }
        if self.kmax == 0 || self.kmax > 12 {
            return bad(format!("kmax must be in 1..=12, got {}", self.kmax));
        }
        if self.bins == 0 {
            return bad("bins must be positive".into());
        }
        if self.gridsize < 8 {
            return bad("gridsize must be at least 8".into());
        }
        if !(self.sigma >= 0.0 && self.sigma.is_finite()) {
            return bad(format!("sigma must be finite and >= 0, got {}", self.sigma));
        }
        if !(self.window_l >= 0.0 && self.window_l.is_finite()) {
            return bad(format!(
                "window_l must be finite and >= 0, got {}",
                self.window_l
            ));
        }
        if self.normalize == Normalize::Figure1 && self.n <= 2 * self.m {
            return bad(format!(
                "figure1 normalization needs n > 2m, got n={} m={}",
                self.n, self.m
            ));
        }
        if self.atlas_n == 0 || self.atlas_n > exact_prob::ATLAS_CAP {
            return bad(format!(
                "atlas_n must be in 1..={}, got {}",
                exact_prob::ATLAS_CAP,
                self.atlas_n
            ));
        }
        if self.top_k == 0 {
            return bad("top_k must be positive".into());
        }
        Ok(())
    }
}
