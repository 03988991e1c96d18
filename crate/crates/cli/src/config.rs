//! Run configuration: defaults, a key=value config file, and flag overrides.

use anyhow::{bail, Context};
use std::path::{Path, PathBuf};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Profile {
    Exact,
    Float,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub k_max: i64,
    pub contour_nodes: usize,
    pub eps_list: Vec<f64>,
    pub theta_grid: usize,
    pub output_dir: PathBuf,
    pub format: Format,
    pub profile: Profile,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            k_max: 32,
            contour_nodes: 128,
            eps_list: vec![0.01],
            theta_grid: 201,
            output_dir: PathBuf::from("."),
            format: Format::Json,
            profile: Profile::Float,
        }
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> anyhow::Result<RunConfig> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let mut cfg = RunConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!(
                    "config line {}: expected key=value, got {raw:?}",
                    lineno + 1
                );
            };
            let (key, value) = (key.trim(), value.trim());
            match key {
                "k_max" => cfg.k_max = value.parse()?,
                "contour_nodes" => cfg.contour_nodes = value.parse()?,
                "eps_list" => {
                    cfg.eps_list = value
                        .split(',')
                        .map(|t| t.trim().parse::<f64>())
                        .collect::<Result<_, _>>()?
                }
                "theta_grid" => cfg.theta_grid = value.parse()?,
                "output_dir" => cfg.output_dir = PathBuf::from(value),
                "format" => {
                    cfg.format = match value {
                        "json" => Format::Json,
                        "csv" => Format::Csv,
                        other => bail!("config: unknown format {other:?}"),
                    }
                }
                "profile" => {
                    cfg.profile = match value {
                        "exact" => Profile::Exact,
                        "float" => Profile::Float,
                        other => bail!("config: unknown profile {other:?}"),
                    }
                }
                other => bail!("config: unknown key {other:?}"),
            }
        }
        Ok(cfg)
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        if self.k_max < 8 {
            bail!("k_max must be at least 8, got {}", self.k_max);
        }
        if self.contour_nodes < 32 || !self.contour_nodes.is_power_of_two() {
            bail!(
                "contour_nodes must be a power of two >= 32, got {}",
                self.contour_nodes
            );
        }
        for &eps in &self.eps_list {
            if !(eps > 0.0 && eps <= 0.1) {
                bail!("eps values must lie in (0, 0.1], got {eps}");
            }
        }
        if self.theta_grid < 2 {
            bail!("theta_grid must be at least 2, got {}", self.theta_grid);
        }
        Ok(())
    }
}

/// Round to 12 significant digits (deterministic across platforms), so the
/// serialized JSON carries exactly the documented precision.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap()
}
