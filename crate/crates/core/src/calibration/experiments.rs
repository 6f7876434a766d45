use std::io::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::search::{calibrate_threshold, ArlMethod, CalibrationConfig};
use super::{estimate_worst_edd, McConfig};
use crate::detectors::{choose_drift, DetectorSpec, DriftMode};
use crate::error::{Error, Result};
use crate::io::fmt_sig;
use crate::models::SpikedModel;
use crate::rng::derive_seed;

/// Trial budgets shared by [`compare`] and [`sweep_window`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    /// Trials per ARL evaluation during calibration.
    pub trials: usize,
    /// Trials for the delay estimate at the calibrated threshold.
    pub edd_trials: usize,
    pub seed: u64,
    pub tolerance: f64,
    /// Estimator for CUSUM-type detectors; the eigenvalue rule always runs
    /// directly.
    pub method: ArlMethod,
    /// See [`CalibrationConfig::allow_short_target`].
    #[serde(default)]
    pub allow_short_target: bool,
}

impl ExperimentConfig {
    pub fn new(trials: usize, edd_trials: usize, seed: u64) -> Self {
        Self {
            trials,
            edd_trials,
            seed,
            tolerance: 0.01,
            method: ArlMethod::Direct,
            allow_short_target: false,
        }
    }
}

/// One calibrated detector at one target run length.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRow {
    pub detector: String,
    pub w: Option<usize>,
    pub target_arl: f64,
    pub b: f64,
    pub arl_hat: f64,
    pub arl_se: f64,
    pub edd_hat: f64,
    pub edd_se: f64,
    /// Censored trials across the final ARL evaluation and the delay run.
    pub censored: usize,
}

fn run_one(
    det: &DetectorSpec,
    model: &SpikedModel,
    target: f64,
    cfg: &ExperimentConfig,
) -> Result<ExperimentRow> {
    let method = match det {
        DetectorSpec::LargestEigenvalue { .. } => ArlMethod::Direct,
        _ => cfg.method,
    };
    let cal_cfg = CalibrationConfig {
        target_arl: target,
        trials: cfg.trials,
        seed: cfg.seed,
        cap: None,
        tolerance: cfg.tolerance,
        method,
        allow_short_target: cfg.allow_short_target,
    };
    let cal = calibrate_threshold(det, model, &cal_cfg)?;
    let edd_mc = McConfig::new(
        cfg.edd_trials,
        derive_seed(cfg.seed, 1 << 40),
        cal_cfg.horizon_cap(),
    );
    let edd = estimate_worst_edd(det, model, cal.threshold, &edd_mc)?;
    Ok(ExperimentRow {
        detector: det.name().to_string(),
        w: det.window(),
        target_arl: target,
        b: cal.threshold,
        arl_hat: cal.summary.mean,
        arl_se: cal.summary.std_err,
        edd_hat: edd.mean,
        edd_se: edd.std_err,
        censored: cal.summary.n_censored + edd.n_censored,
    })
}

/// Worst-case delay against run length for several detectors: each is
/// calibrated to every target and its delay measured with the change at
/// time 0. All detectors share the same trial seeds.
pub fn compare(
    detectors: &[DetectorSpec],
    model: &SpikedModel,
    targets: &[f64],
    cfg: &ExperimentConfig,
) -> Result<Vec<ExperimentRow>> {
    if detectors.is_empty() || targets.is_empty() {
        return Err(Error::invalid("targets", "need at least one detector and one target"));
    }
    let mut rows = Vec::with_capacity(detectors.len() * targets.len());
    for det in detectors {
        for &target in targets {
            rows.push(run_one(det, model, target, cfg)?);
        }
    }
    Ok(rows)
}

/// Window-based detector family swept over `w`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SweepDetector {
    LargestEigenvalue,
    /// Drift chosen per window from `sigma2_hat` and `rho_min`.
    SubspaceCusum {
        sigma2_hat: f64,
        rho_min: f64,
        drift: DriftMode,
    },
}

impl SweepDetector {
    pub fn at_window(&self, k: usize, w: usize) -> Result<DetectorSpec> {
        Ok(match *self {
            SweepDetector::LargestEigenvalue => DetectorSpec::LargestEigenvalue { k, w },
            SweepDetector::SubspaceCusum {
                sigma2_hat,
                rho_min,
                drift,
            } => DetectorSpec::SubspaceCusum {
                k,
                w,
                drift: choose_drift(sigma2_hat, rho_min, w, k, drift)?,
            },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    /// Every `(w, target)` pair, window-major.
    pub rows: Vec<ExperimentRow>,
    /// Per target, the row with the smallest delay.
    pub envelope: Vec<ExperimentRow>,
}

impl SweepResult {
    /// `(target, w)` minimizing the delay for each target.
    pub fn argmin_w(&self) -> Vec<(f64, Option<usize>)> {
        self.envelope.iter().map(|r| (r.target_arl, r.w)).collect()
    }
}

/// Calibrates and measures the delay for every window in `w_values` and
/// every run length in `targets`.
pub fn sweep_window(
    family: &SweepDetector,
    model: &SpikedModel,
    w_values: &[usize],
    targets: &[f64],
    cfg: &ExperimentConfig,
) -> Result<SweepResult> {
    if w_values.is_empty() || targets.is_empty() {
        return Err(Error::invalid("w_values", "need at least one window and one target"));
    }
    let mut rows = Vec::with_capacity(w_values.len() * targets.len());
    for &w in w_values {
        let det = family.at_window(model.k(), w)?;
        for &target in targets {
            rows.push(run_one(&det, model, target, cfg)?);
        }
    }
    let envelope = targets
        .iter()
        .map(|&t| {
            rows.iter()
                .filter(|r| r.target_arl == t)
                .min_by(|a, b| a.edd_hat.total_cmp(&b.edd_hat))
                .cloned()
                .expect("one row per window")
        })
        .collect();
    Ok(SweepResult { rows, envelope })
}

/// Writes rows as CSV preceded by a `#` line holding `header` as JSON.
pub fn write_rows_csv<W: Write>(mut out: W, header: &Value, rows: &[ExperimentRow]) -> Result<()> {
    let meta = serde_json::to_string(header).map_err(|e| Error::invalid("header", e.to_string()))?;
    writeln!(out, "# {meta}")?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "detector", "w", "target_arl", "b", "arl_hat", "arl_se", "edd_hat", "edd_se", "censored",
    ])?;
    for r in rows {
        w.write_record([
            r.detector.clone(),
            r.w.map(|w| w.to_string()).unwrap_or_default(),
            fmt_sig(r.target_arl),
            fmt_sig(r.b),
            fmt_sig(r.arl_hat),
            fmt_sig(r.arl_se),
            fmt_sig(r.edd_hat),
            fmt_sig(r.edd_se),
            r.censored.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// JSON output wrapper echoing the configuration that produced it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultEnvelope<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: Value,
    pub result: T,
}

impl<T: Serialize> ResultEnvelope<T> {
    pub fn new(config: Value, result: T) -> Self {
        Self {
            tool: "subspace-cpd",
            version: env!("CARGO_PKG_VERSION"),
            config,
            result,
        }
    }
}
