use serde::{Deserialize, Serialize};

use super::{McConfig, RunLengths, SprtRunLengths, TrialSummary};
use crate::detectors::DetectorSpec;
use crate::error::{Error, Result};
use crate::models::SpikedModel;
use crate::theory::{threshold_prop1, threshold_prop2, tw_center_scale};

const MAX_EXPANSIONS: usize = 60;
const MAX_BISECTIONS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArlMethod {
    #[default]
    Direct,
    /// SPRT identity; CUSUM and Subspace-CUSUM only.
    Sprt,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CalibrationConfig {
    pub target_arl: f64,
    pub trials: usize,
    pub seed: u64,
    /// Defaults to 20 × target.
    pub cap: Option<usize>,
    /// Relative ARL tolerance.
    pub tolerance: f64,
    pub method: ArlMethod,
    /// Skips the `target ≥ 10 w` check for window-based detectors.
    #[serde(default)]
    pub allow_short_target: bool,
}

impl CalibrationConfig {
    pub fn new(target_arl: f64, trials: usize, seed: u64) -> Self {
        Self {
            target_arl,
            trials,
            seed,
            cap: None,
            tolerance: 0.01,
            method: ArlMethod::Direct,
            allow_short_target: false,
        }
    }

    pub fn horizon_cap(&self) -> usize {
        self.cap
            .unwrap_or_else(|| (20.0 * self.target_arl).ceil() as usize)
    }

    pub fn validate(&self, det: &DetectorSpec) -> Result<()> {
        if !(self.target_arl > 0.0) || !self.target_arl.is_finite() {
            return Err(Error::invalid("target_arl", "must be positive and finite"));
        }
        if let Some(w) = det.window().filter(|_| !self.allow_short_target) {
            if self.target_arl < 10.0 * w as f64 {
                return Err(Error::invalid(
                    "target_arl",
                    format!("must be at least 10 w = {}", 10 * w),
                ));
            }
        }
        if self.trials < 100 {
            return Err(Error::invalid("trials", "calibration needs at least 100 trials"));
        }
        if (self.horizon_cap() as f64) < 20.0 * self.target_arl {
            return Err(Error::invalid("cap", "must be at least 20 x target ARL"));
        }
        if !(self.tolerance > 0.0) {
            return Err(Error::invalid("tolerance", "must be positive"));
        }
        Ok(())
    }
}

/// A threshold and the run length achieved with it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Calibration {
    pub threshold: f64,
    pub summary: TrialSummary,
    pub evaluations: usize,
    /// False when the bracket collapsed before the tolerance was met; the
    /// closest threshold found is returned.
    pub converged: bool,
}

/// Starting threshold and bracketing step for a target run length.
///
/// CUSUM-type rules start at half of `ln(ARL)` nats on the log-likelihood
/// scale with a one-nat step; the eigenvalue rule starts from the
/// correlated Tracy–Widom approximation with half a scale unit as step.
/// Paths are only extended as far as the highest threshold evaluated, so
/// starting low is cheap and overshooting is not.
pub fn threshold_guess(det: &DetectorSpec, model: &SpikedModel, target_arl: f64) -> (f64, f64) {
    let target = target_arl.max(2.0);
    match det {
        DetectorSpec::Cusum { .. } | DetectorSpec::SubspaceCusum { .. } => {
            let rho = if model.rho() > 0.0 { model.rho() } else { 1.0 };
            let nat = 2.0 * model.sigma2() * (1.0 + rho) / rho;
            (0.5 * nat * target.ln(), nat)
        }
        DetectorSpec::LargestEigenvalue { k, w } => {
            let scale = model.sigma2();
            match tw_center_scale((*w).max(2), *k) {
                Ok(c) => {
                    let b = threshold_prop2(target, *w, *k)
                        .or_else(|_| threshold_prop1(target, *w, *k).map(|p| p.b))
                        .unwrap_or(c.mu + 3.0 * c.sigma);
                    (scale * b, scale * 0.5 * c.sigma)
                }
                Err(_) => (scale * target.ln(), scale),
            }
        }
    }
}

/// Next upward increment while bracketing: a log-linear extrapolation to
/// twice the target from the last two points, limited to `max_step`.
fn upward_step(prev: Option<(f64, f64)>, last: (f64, f64), target: f64, max_step: f64) -> f64 {
    let Some((b0, m0)) = prev else {
        return max_step;
    };
    let (b1, m1) = last;
    let slope = (m1.ln() - m0.ln()) / (b1 - b0);
    if !(slope > 0.0) || !slope.is_finite() || !(m1 > 0.0) {
        return max_step;
    }
    let step = ((2.0 * target).ln() - m1.ln()) / slope;
    step.clamp(0.05 * max_step, max_step)
}

enum Estimator {
    Direct(RunLengths),
    Sprt(SprtRunLengths),
}

impl Estimator {
    fn summary(&mut self, b: f64) -> Result<TrialSummary> {
        match self {
            Estimator::Direct(r) => r.summary(b),
            Estimator::Sprt(r) => match r.summary(b) {
                // Too few upper exits to estimate: treat as a run length
                // beyond anything measurable.
                Err(Error::NoUpperExits(n)) => Ok(TrialSummary {
                    mean: f64::INFINITY,
                    std_err: f64::INFINITY,
                    n_censored: 0,
                    trials: n,
                    warning: Some("no upper exits".into()),
                }),
                other => other,
            },
        }
    }
}

/// Bisection on `b` for `ARL(b) = target`, reusing the same trial seeds at
/// every evaluation.
///
/// Stops when `|ARL − target| / target ≤ max(tolerance, 2 s.e. / target)`.
pub fn calibrate_threshold(
    det: &DetectorSpec,
    model: &SpikedModel,
    cfg: &CalibrationConfig,
) -> Result<Calibration> {
    cfg.validate(det)?;
    let mc = McConfig::new(cfg.trials, cfg.seed, cfg.horizon_cap());
    let mut est = match cfg.method {
        ArlMethod::Direct => Estimator::Direct(RunLengths::pre_change(det, model, &mc)?),
        ArlMethod::Sprt => Estimator::Sprt(SprtRunLengths::new(det, model, &mc)?),
    };
    let target = cfg.target_arl;
    let mut evaluations = 0;
    let mut eval = |b: f64| {
        evaluations += 1;
        est.summary(b)
    };
    let accept = |s: &TrialSummary| {
        (s.mean - target).abs() / target <= cfg.tolerance.max(2.0 * s.std_err / target)
    };

    let (guess, step) = threshold_guess(det, model, target);
    let first = eval(guess)?;
    if accept(&first) {
        return Ok(Calibration {
            threshold: guess,
            summary: first,
            evaluations: 1,
            converged: true,
        });
    }
    let above = first.mean >= target;
    let (mut lo, mut hi) = (guess, guess);
    let (mut lo_s, mut hi_s) = (first.clone(), first);
    let mut found = false;
    let mut delta = step;
    let mut prev = None;
    for _ in 0..MAX_EXPANSIONS {
        if above {
            let b = (hi - delta).max(0.0);
            let s = eval(b)?;
            if accept(&s) {
                return Ok(Calibration { threshold: b, summary: s, evaluations, converged: true });
            }
            if s.mean < target {
                lo = b;
                lo_s = s;
                found = true;
                break;
            }
            hi = b;
            hi_s = s;
            if b == 0.0 {
                break;
            }
        } else {
            let b = lo + upward_step(prev, (lo, lo_s.mean), target, delta);
            prev = Some((lo, lo_s.mean));
            let s = eval(b)?;
            if accept(&s) {
                return Ok(Calibration { threshold: b, summary: s, evaluations, converged: true });
            }
            if s.mean >= target {
                hi = b;
                hi_s = s;
                found = true;
                break;
            }
            lo = b;
            lo_s = s;
        }
        delta *= 2.0;
    }
    if !found {
        return Err(Error::BracketNotFound {
            target,
            expansions: MAX_EXPANSIONS,
        });
    }

    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if !(mid > lo && mid < hi) {
            break;
        }
        let s = eval(mid)?;
        if accept(&s) {
            return Ok(Calibration { threshold: mid, summary: s, evaluations, converged: true });
        }
        if s.mean < target {
            lo = mid;
            lo_s = s;
        } else {
            hi = mid;
            hi_s = s;
        }
    }
    let (threshold, summary) = if (target - lo_s.mean).abs() <= (hi_s.mean - target).abs() {
        (lo, lo_s)
    } else {
        (hi, hi_s)
    };
    Ok(Calibration {
        threshold,
        summary,
        evaluations,
        converged: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precondition_checks() {
        let model = SpikedModel::axis(5, 1.0, 1.0, 0).unwrap();
        let eig = DetectorSpec::LargestEigenvalue { k: 5, w: 20 };
        assert!(CalibrationConfig::new(100.0, 200, 1).validate(&eig).is_err());
        let mut short = CalibrationConfig::new(100.0, 200, 1);
        short.allow_short_target = true;
        assert!(short.validate(&eig).is_ok());
        assert!(CalibrationConfig::new(200.0, 50, 1).validate(&eig).is_err());
        let mut c = CalibrationConfig::new(200.0, 200, 1);
        c.cap = Some(100);
        assert!(c.validate(&eig).is_err());
        let cusum = DetectorSpec::Cusum { model };
        assert!(CalibrationConfig::new(50.0, 200, 1).validate(&cusum).is_ok());
    }

    #[test]
    fn cusum_calibration_hits_target() {
        let model = SpikedModel::axis(3, 1.0, 1.0, 0).unwrap();
        let det = DetectorSpec::Cusum { model: model.clone() };
        let mut cfg = CalibrationConfig::new(200.0, 400, 5);
        cfg.tolerance = 0.05;
        let cal = calibrate_threshold(&det, &model, &cfg).unwrap();
        assert!(cal.converged);
        let s = &cal.summary;
        assert!((s.mean - 200.0).abs() <= (0.05 * 200.0f64).max(2.0 * s.std_err) + 1e-9);
    }
}
