use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use subspace_cpd::calibration::{ArlMethod, ExperimentConfig, SweepDetector};
use subspace_cpd::detectors::{choose_drift, MIN_DRIFT_TRIALS};
use subspace_cpd::rng::{derive_seed, Gaussian};
use subspace_cpd::{DetectorSpec, DriftMode, SpikedModel};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum DetectorKind {
    Cusum,
    #[value(alias = "eig")]
    LargestEigenvalue,
    #[value(alias = "subspace")]
    SubspaceCusum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum DriftModeArg {
    Average,
    MonteCarlo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum MethodArg {
    Direct,
    Sprt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Every setting of a run. Each field can come from `--config` or from a
/// flag; flags win. Fields a command does not use are ignored.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize, Args)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Dimension of the observations.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// Noise variance σ² [default: 1].
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma2: Option<f64>,
    /// Spike size θ [default: 1].
    #[arg(long, conflicts_with = "rho")]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    /// Signal-to-noise ratio θ/σ², instead of --theta.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<f64>,
    /// Spike direction: "random", "axis:<i>" or comma-separated entries
    /// [default: axis:0].
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<String>,
    /// Detector for calibrate, arl, edd, sweep and trace.
    #[arg(long, value_enum)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detector: Option<DetectorKind>,
    /// Detectors for compare [default: all three].
    #[arg(long, value_enum, value_delimiter = ',')]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detectors: Option<Vec<DetectorKind>>,
    /// Window length.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<usize>,
    /// Window lengths for sweep.
    #[arg(long, value_delimiter = ',')]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub windows: Option<Vec<usize>>,
    /// Subspace-CUSUM drift; chosen from --drift-mode when absent.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub drift: Option<f64>,
    /// How to choose the Subspace-CUSUM drift [default: average].
    #[arg(long, value_enum)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub drift_mode: Option<DriftModeArg>,
    /// Trials for --drift-mode monte-carlo [default: 10000].
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub drift_trials: Option<usize>,
    /// Smallest SNR the drift is tuned for [default: the model's ρ].
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho_min: Option<f64>,
    /// Noise variance estimate used for the drift [default: σ²].
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma2_hat: Option<f64>,
    /// Target average run lengths.
    #[arg(long, value_delimiter = ',')]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arl: Option<Vec<f64>>,
    /// Thresholds for arl, edd and trace.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<f64>>,
    /// Monte-Carlo trials [default: 1000].
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    /// Trials for delay estimates in compare and sweep [default: --trials].
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edd_trials: Option<usize>,
    /// Master seed [default: 1].
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Censoring horizon [default: 20 × target for calibration, 10⁶ otherwise].
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
    /// Relative ARL tolerance of the threshold search [default: 0.01].
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    /// ARL estimator for CUSUM-type detectors [default: direct].
    #[arg(long, value_enum)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<MethodArg>,
    /// Allow target ARLs below 10 w for windowed detectors.
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub allow_short_arl: Option<bool>,
    /// Largest tolerated fraction of censored trials before exiting with
    /// status 3 [default: 0.01].
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub censor_budget: Option<f64>,
    /// theory: also calibrate the eigenvalue rule by simulation.
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simulate: Option<bool>,
    /// Pre-change spike direction for project (same syntax as --u).
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u1: Option<String>,
    /// Post-change spike direction for project.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u2: Option<String>,
    /// Reject non-unit direction vectors instead of normalizing them.
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strict: Option<bool>,
    /// Change time of generated streams; observations after it are
    /// post-change [default: never].
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<usize>,
    /// Length of generated streams.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Stream CSV to read instead of generating one.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<PathBuf>,
    /// Where to write the generated (trace) or projected (project) stream.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stream_out: Option<PathBuf>,
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

impl RunConfig {
    /// File values overlaid with every flag that was given.
    pub fn merged(file: Option<&Path>, flags: &RunConfig) -> Result<RunConfig, CliError> {
        let Some(path) = file else {
            return Ok(flags.clone());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| invalid(format!("cannot read config {}: {e}", path.display())))?;
        let mut base: Map<String, Value> = serde_json::from_str(&text)
            .map_err(|e| invalid(format!("config {}: {e}", path.display())))?;
        let over = serde_json::to_value(flags).expect("config serializes");
        if let Value::Object(over) = over {
            base.extend(over);
        }
        serde_json::from_value(Value::Object(base))
            .map_err(|e| invalid(format!("config {}: {e}", path.display())))
    }

    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(1)
    }

    pub fn trials(&self) -> usize {
        self.trials.unwrap_or(1000)
    }

    pub fn strict(&self) -> bool {
        self.strict.unwrap_or(false)
    }

    pub fn sigma2(&self) -> Result<f64, CliError> {
        let s = self.sigma2.unwrap_or(1.0);
        if !(s > 0.0) || !s.is_finite() {
            return Err(invalid("--sigma2 must be positive and finite"));
        }
        Ok(s)
    }

    pub fn theta(&self) -> Result<f64, CliError> {
        let theta = match (self.theta, self.rho) {
            (Some(_), Some(_)) => return Err(invalid("give --theta or --rho, not both")),
            (Some(t), None) => t,
            (None, Some(r)) => r * self.sigma2()?,
            (None, None) => 1.0,
        };
        if !(theta >= 0.0) || !theta.is_finite() {
            return Err(invalid("--theta must be nonnegative and finite"));
        }
        Ok(theta)
    }

    pub fn k(&self) -> Result<usize, CliError> {
        let from_u = [&self.u, &self.u1, &self.u2]
            .into_iter()
            .flatten()
            .find_map(|s| explicit_len(s));
        match (self.k, from_u) {
            (Some(k), Some(n)) if k != n => {
                Err(invalid(format!("--k {k} disagrees with a direction of length {n}")))
            }
            (Some(0), _) => Err(invalid("--k must be at least 1")),
            (Some(k), _) | (None, Some(k)) => Ok(k),
            (None, None) => Err(invalid("--k is required")),
        }
    }

    pub fn w(&self) -> Result<usize, CliError> {
        self.w.ok_or_else(|| invalid("--w is required"))
    }

    pub fn targets(&self) -> Result<Vec<f64>, CliError> {
        let t = self.arl.clone().ok_or_else(|| invalid("--arl is required"))?;
        if t.is_empty() {
            return Err(invalid("--arl needs at least one value"));
        }
        if let Some(bad) = t.iter().find(|a| !(**a > 0.0) || !a.is_finite()) {
            return Err(invalid(format!("--arl values must be positive and finite, got {bad}")));
        }
        Ok(t)
    }

    pub fn thresholds(&self) -> Result<Vec<f64>, CliError> {
        let b = self.b.clone().ok_or_else(|| invalid("--b is required"))?;
        if b.is_empty() {
            return Err(invalid("--b needs at least one value"));
        }
        Ok(b)
    }

    pub fn censor_budget(&self) -> Result<f64, CliError> {
        let c = self.censor_budget.unwrap_or(0.01);
        if !(0.0..=1.0).contains(&c) {
            return Err(invalid("--censor-budget must lie in [0, 1]"));
        }
        Ok(c)
    }

    pub fn method(&self) -> ArlMethod {
        match self.method {
            Some(MethodArg::Sprt) => ArlMethod::Sprt,
            _ => ArlMethod::Direct,
        }
    }

    /// Parses a direction given as "random", "axis:i" or a list.
    pub fn direction(&self, spec: Option<&str>, k: usize, salt: u64) -> Result<Vec<f64>, CliError> {
        let spec = spec.unwrap_or("axis:0").trim();
        if spec == "random" {
            return Ok(Gaussian::new(derive_seed(self.seed(), u64::MAX - salt)).unit_vector(k));
        }
        if let Some(i) = spec.strip_prefix("axis:") {
            let i: usize = i.parse().map_err(|_| invalid(format!("bad axis in {spec:?}")))?;
            if i >= k {
                return Err(invalid(format!("axis {i} out of range for k = {k}")));
            }
            let mut u = vec![0.0; k];
            u[i] = 1.0;
            return Ok(u);
        }
        let mut u = parse_list(spec)?;
        if u.len() != k {
            return Err(invalid(format!("direction has {} entries, expected {k}", u.len())));
        }
        let n = u.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !(n > 0.0) || !n.is_finite() {
            return Err(invalid("direction must be a nonzero finite vector"));
        }
        if (n - 1.0).abs() > 1e-10 {
            if self.strict() {
                return Err(invalid(format!("direction has norm {n}, expected 1 (--strict)")));
            }
            eprintln!("warning: direction {spec:?} has norm {n}; normalizing");
            u.iter_mut().for_each(|x| *x /= n);
        }
        Ok(u)
    }

    pub fn model(&self) -> Result<SpikedModel, CliError> {
        let k = self.k()?;
        let u = self.direction(self.u.as_deref(), k, 0)?;
        SpikedModel::new(self.sigma2()?, self.theta()?, u).map_err(CliError::from)
    }

    fn drift_mode(&self) -> Result<DriftMode, CliError> {
        Ok(match self.drift_mode.unwrap_or(DriftModeArg::Average) {
            DriftModeArg::Average => DriftMode::Average,
            DriftModeArg::MonteCarlo => DriftMode::MonteCarlo {
                trials: self.drift_trials.unwrap_or(MIN_DRIFT_TRIALS),
                seed: derive_seed(self.seed(), 1 << 41),
            },
        })
    }

    fn drift_inputs(&self, model: &SpikedModel) -> Result<(f64, f64), CliError> {
        let sigma2_hat = self.sigma2_hat.unwrap_or(model.sigma2());
        let rho_min = self.rho_min.unwrap_or(model.rho());
        Ok((sigma2_hat, rho_min))
    }

    pub fn detector(&self, kind: DetectorKind, model: &SpikedModel) -> Result<DetectorSpec, CliError> {
        let k = model.k();
        let spec = match kind {
            DetectorKind::Cusum => DetectorSpec::Cusum {
                model: model.clone(),
            },
            DetectorKind::LargestEigenvalue => DetectorSpec::LargestEigenvalue { k, w: self.w()? },
            DetectorKind::SubspaceCusum => {
                let w = self.w()?;
                let drift = match self.drift {
                    Some(d) => d,
                    None => {
                        let (s, r) = self.drift_inputs(model)?;
                        choose_drift(s, r, w, k, self.drift_mode()?)?
                    }
                };
                DetectorSpec::SubspaceCusum { k, w, drift }
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn single_detector(&self, model: &SpikedModel) -> Result<DetectorSpec, CliError> {
        let kind = self.detector.ok_or_else(|| invalid("--detector is required"))?;
        self.detector(kind, model)
    }

    pub fn sweep_family(&self, model: &SpikedModel) -> Result<SweepDetector, CliError> {
        match self.detector.ok_or_else(|| invalid("--detector is required"))? {
            DetectorKind::Cusum => Err(invalid("sweep needs a windowed detector")),
            DetectorKind::LargestEigenvalue => Ok(SweepDetector::LargestEigenvalue),
            DetectorKind::SubspaceCusum => {
                let (sigma2_hat, rho_min) = self.drift_inputs(model)?;
                Ok(SweepDetector::SubspaceCusum {
                    sigma2_hat,
                    rho_min,
                    drift: self.drift_mode()?,
                })
            }
        }
    }

    pub fn experiment(&self) -> Result<ExperimentConfig, CliError> {
        let trials = self.trials();
        let mut cfg = ExperimentConfig::new(trials, self.edd_trials.unwrap_or(trials), self.seed());
        cfg.tolerance = self.tolerance.unwrap_or(0.01);
        cfg.method = self.method();
        cfg.allow_short_target = self.allow_short_arl.unwrap_or(false);
        if cfg.edd_trials < 2 {
            return Err(invalid("--edd-trials must be at least 2"));
        }
        Ok(cfg)
    }
}

fn explicit_len(spec: &str) -> Option<usize> {
    let s = spec.trim();
    (s != "random" && !s.starts_with("axis:")).then(|| s.split(',').count())
}

pub fn parse_list(s: &str) -> Result<Vec<f64>, CliError> {
    s.split(',')
        .map(|v| {
            v.trim()
                .parse::<f64>()
                .map_err(|_| invalid(format!("bad number {v:?} in {s:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file_values() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cfg.json");
        std::fs::write(&path, r#"{"k": 5, "w": 20, "seed": 9}"#).unwrap();
        let flags = RunConfig {
            w: Some(30),
            ..Default::default()
        };
        let cfg = RunConfig::merged(Some(&path), &flags).unwrap();
        assert_eq!((cfg.k, cfg.w, cfg.seed), (Some(5), Some(30), Some(9)));
    }

    #[test]
    fn unknown_config_keys_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cfg.json");
        std::fs::write(&path, r#"{"kk": 5}"#).unwrap();
        let err = RunConfig::merged(Some(&path), &RunConfig::default()).unwrap_err();
        assert!(matches!(err, CliError::Validation(_)));
    }

    #[test]
    fn directions() {
        let cfg = RunConfig::default();
        assert_eq!(cfg.direction(Some("axis:2"), 3, 0).unwrap(), vec![0.0, 0.0, 1.0]);
        assert!(cfg.direction(Some("axis:3"), 3, 0).is_err());
        let u = cfg.direction(Some("3,4"), 2, 0).unwrap();
        assert!((u[0] - 0.6).abs() < 1e-15);
        let strict = RunConfig {
            strict: Some(true),
            ..Default::default()
        };
        assert!(strict.direction(Some("3,4"), 2, 0).is_err());
        let r = cfg.direction(Some("random"), 4, 0).unwrap();
        assert!((r.iter().map(|x| x * x).sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dimension_from_explicit_direction() {
        let cfg = RunConfig {
            u: Some("0,1,0".into()),
            ..Default::default()
        };
        assert_eq!(cfg.k().unwrap(), 3);
        let clash = RunConfig {
            k: Some(4),
            ..cfg
        };
        assert!(clash.k().is_err());
    }

    #[test]
    fn rho_sets_theta_relative_to_sigma2() {
        let cfg = RunConfig {
            sigma2: Some(2.0),
            rho: Some(1.5),
            ..Default::default()
        };
        assert_eq!(cfg.theta().unwrap(), 3.0);
    }
}
