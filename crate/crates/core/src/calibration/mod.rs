//! Monte-Carlo run lengths, detection delays and threshold calibration.
//!
//! Trial `i` of a run with seed `s` draws its data from
//! `derive_seed(s, i)` only, and results are aggregated in trial order, so
//! every estimate is reproducible regardless of thread count.

mod experiments;
mod paths;
mod search;

use serde::{Deserialize, Serialize};

pub use experiments::{
    compare, sweep_window, write_rows_csv, ExperimentConfig, ExperimentRow, ResultEnvelope,
    SweepDetector, SweepResult,
};
pub use search::{calibrate_threshold, threshold_guess, ArlMethod, Calibration, CalibrationConfig};

use crate::detectors::DetectorSpec;
use crate::error::{check_dim, Error, Result};
use crate::models::{ChangeTime, Sampler, SpikedModel};
use crate::rng::derive_seed;
use paths::{DetectorPath, Ensemble, Passage, SprtPath};

/// Fraction of censored trials above which a summary carries a warning.
pub const CENSOR_WARN_FRACTION: f64 = 0.01;

/// Trial budget for one estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct McConfig {
    pub trials: usize,
    pub seed: u64,
    /// Trials still running after this many time steps are censored and
    /// contribute `cap` to the mean.
    pub cap: usize,
}

impl McConfig {
    pub fn new(trials: usize, seed: u64, cap: usize) -> Self {
        Self { trials, seed, cap }
    }

    fn validate(&self) -> Result<()> {
        if self.trials < 2 {
            return Err(Error::invalid("trials", "need at least 2 trials"));
        }
        if self.cap == 0 {
            return Err(Error::invalid("cap", "must be at least 1"));
        }
        Ok(())
    }
}

/// Mean stopping time over independent trials.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialSummary {
    pub mean: f64,
    /// Sample standard deviation over `√trials` (delta method for the SPRT
    /// estimator).
    pub std_err: f64,
    pub n_censored: usize,
    pub trials: usize,
    /// Set when more than 1% of trials were censored; the mean is then
    /// biased low.
    pub warning: Option<String>,
}

impl TrialSummary {
    fn from_values(values: &[f64], n_censored: usize) -> Self {
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
        Self {
            mean,
            std_err: (var / n).sqrt(),
            n_censored,
            trials: values.len(),
            warning: censor_warning(n_censored, values.len()),
        }
    }
}

fn censor_warning(censored: usize, trials: usize) -> Option<String> {
    (censored as f64 > CENSOR_WARN_FRACTION * trials as f64).then(|| {
        format!("{censored} of {trials} trials censored; estimate biased low")
    })
}

fn check_threshold(b: f64) -> Result<()> {
    if !(b >= 0.0) || !b.is_finite() {
        return Err(Error::invalid("threshold", "must be finite and nonnegative"));
    }
    Ok(())
}

/// How the data of each trial is generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Regime {
    PreChange,
    PostChange,
}

fn sampler(model: &SpikedModel, regime: Regime, seed: u64) -> Sampler {
    match regime {
        Regime::PreChange => Sampler::null(model.k(), model.sigma2(), seed),
        Regime::PostChange => Sampler::new(model, ChangeTime::At(0), seed),
    }
}

/// Stopping times of `det` on data from `model` under a common set of
/// trial seeds, for any number of thresholds.
///
/// ```
/// use subspace_cpd::calibration::{McConfig, RunLengths};
/// use subspace_cpd::{DetectorSpec, SpikedModel};
///
/// let model = SpikedModel::axis(5, 1.0, 1.0, 0)?;
/// let det = DetectorSpec::Cusum { model: model.clone() };
/// let mut arl = RunLengths::pre_change(&det, &model, &McConfig::new(200, 1, 100_000))?;
/// let (low, high) = (arl.summary(4.0)?, arl.summary(8.0)?);
/// assert!(low.mean < high.mean);
/// # Ok::<(), subspace_cpd::Error>(())
/// ```
pub struct RunLengths {
    ensemble: Ensemble,
}

impl RunLengths {
    fn new(det: &DetectorSpec, model: &SpikedModel, mc: &McConfig, regime: Regime) -> Result<Self> {
        mc.validate()?;
        check_dim(det.dim(), model.k())?;
        det.validate()?;
        let ensemble = Ensemble::new(mc.trials, mc.cap, |i| {
            let s = sampler(model, regime, derive_seed(mc.seed, i));
            Ok(Box::new(DetectorPath::new(det.build(f64::INFINITY)?, s)) as _)
        })?;
        Ok(Self { ensemble })
    }

    /// Run lengths under pure noise `N(0, σ² I)`.
    pub fn pre_change(det: &DetectorSpec, model: &SpikedModel, mc: &McConfig) -> Result<Self> {
        Self::new(det, model, mc, Regime::PreChange)
    }

    /// Delays with the change at time 0, i.e. every observation is
    /// post-change and the detector starts from its initial state.
    pub fn post_change(det: &DetectorSpec, model: &SpikedModel, mc: &McConfig) -> Result<Self> {
        Self::new(det, model, mc, Regime::PostChange)
    }

    pub fn summary(&mut self, b: f64) -> Result<TrialSummary> {
        check_threshold(b)?;
        let cap = self.ensemble.cap() as f64;
        let passages = self.ensemble.passages(b)?;
        let mut censored = 0;
        let values: Vec<f64> = passages
            .iter()
            .map(|p| match *p {
                Passage::Hit(t) | Passage::Ended(t) => t as f64,
                Passage::Censored => {
                    censored += 1;
                    cap
                }
            })
            .collect();
        Ok(TrialSummary::from_values(&values, censored))
    }
}

/// Run lengths of a reflected statistic through the SPRT identity
/// `E_∞[T] = E_∞[T_SPRT] / P_∞(upper exit)`, plus the look-ahead.
pub struct SprtRunLengths {
    ensemble: Ensemble,
    lookahead: usize,
}

impl SprtRunLengths {
    pub fn new(det: &DetectorSpec, model: &SpikedModel, mc: &McConfig) -> Result<Self> {
        mc.validate()?;
        check_dim(det.dim(), model.k())?;
        det.build_reflected(0.0)?;
        let ensemble = Ensemble::new(mc.trials, mc.cap, |i| {
            let s = sampler(model, Regime::PreChange, derive_seed(mc.seed, i));
            Ok(Box::new(SprtPath::new(det.build_reflected(f64::INFINITY)?, s)) as _)
        })?;
        Ok(Self {
            ensemble,
            lookahead: det.lookahead(),
        })
    }

    /// Fraction of cycles leaving through the upper boundary `b`.
    pub fn upper_fraction(&mut self, b: f64) -> Result<f64> {
        check_threshold(b)?;
        let n = self.ensemble.len() as f64;
        let upper = self
            .ensemble
            .passages(b)?
            .iter()
            .filter(|p| matches!(p, Passage::Hit(_)))
            .count();
        Ok(upper as f64 / n)
    }

    pub fn summary(&mut self, b: f64) -> Result<TrialSummary> {
        check_threshold(b)?;
        let cap = self.ensemble.cap() as f64;
        let passages = self.ensemble.passages(b)?;
        let n = passages.len();
        let mut censored = 0;
        let pairs: Vec<(f64, f64)> = passages
            .iter()
            .map(|p| match *p {
                Passage::Hit(t) => (t as f64, 1.0),
                Passage::Ended(t) => (t as f64, 0.0),
                Passage::Censored => {
                    censored += 1;
                    (cap, 0.0)
                }
            })
            .collect();
        let upper: f64 = pairs.iter().map(|p| p.1).sum();
        if upper == 0.0 {
            return Err(Error::NoUpperExits(n));
        }
        let nf = n as f64;
        let mean_t = pairs.iter().map(|p| p.0).sum::<f64>() / nf;
        let frac = upper / nf;
        let ratio = mean_t / frac;
        // Delta method for a ratio of means: Var(T − R·U) / (n p²).
        let resid_var = pairs
            .iter()
            .map(|&(t, u)| (t - ratio * u).powi(2))
            .sum::<f64>()
            / (nf - 1.0);
        Ok(TrialSummary {
            mean: ratio + self.lookahead as f64,
            std_err: (resid_var / nf).sqrt() / frac,
            n_censored: censored,
            trials: n,
            warning: censor_warning(censored, n),
        })
    }
}

/// Average run length under pure noise, by running every trial to its
/// stop.
pub fn estimate_arl_direct(
    det: &DetectorSpec,
    model: &SpikedModel,
    b: f64,
    mc: &McConfig,
) -> Result<TrialSummary> {
    RunLengths::pre_change(det, model, mc)?.summary(b)
}

/// Average run length through the SPRT identity; CUSUM and
/// Subspace-CUSUM only. Each trial is one cycle from a fresh stream.
pub fn estimate_arl_sprt(
    det: &DetectorSpec,
    model: &SpikedModel,
    b: f64,
    mc: &McConfig,
) -> Result<TrialSummary> {
    SprtRunLengths::new(det, model, mc)?.summary(b)
}

/// Worst-case expected detection delay, realized as `E₀[T]` with the change
/// at time 0. Subspace-CUSUM delays include its look-ahead.
pub fn estimate_worst_edd(
    det: &DetectorSpec,
    model: &SpikedModel,
    b: f64,
    mc: &McConfig,
) -> Result<TrialSummary> {
    RunLengths::post_change(det, model, mc)?.summary(b)
}
