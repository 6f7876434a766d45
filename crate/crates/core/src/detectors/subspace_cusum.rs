use crate::error::{Error, Result};
use crate::linalg::{dot, PowerIteration, WindowCovariance};

use super::{Detector, ReflectedStatistic, Stopping};

/// CUSUM with an estimated spike direction.
///
/// Observation `x_t` is scored once `x_{t+1}, …, x_{t+w}` have arrived,
/// using the leading eigenvector `û` of their un-normalized covariance:
/// `𝒮_t = max(𝒮_{t-1}, 0) + (ûᵀx_t)² − d`. The first `w` observations only
/// fill the look-ahead window. Because scoring lags arrival by `w`, a raw
/// crossing at `t` is acted on at `t + w`; [`Detector::stopped_at`] reports
/// that corrected time, which equals the number of observations consumed.
#[derive(Debug, Clone)]
pub struct SubspaceCusum {
    wc: WindowCovariance,
    cfg: PowerIteration,
    drift: f64,
    stat: Option<f64>,
    t: usize,
    scored: Vec<f64>,
    stop: Stopping,
}

impl SubspaceCusum {
    pub fn new(k: usize, w: usize, drift: f64, threshold: f64) -> Result<Self> {
        if !(drift > 0.0) || !drift.is_finite() {
            return Err(Error::invalid("drift", "must be positive and finite"));
        }
        Ok(Self {
            wc: WindowCovariance::new(k, w)?,
            cfg: PowerIteration::for_dim(k),
            drift,
            stat: None,
            t: 0,
            scored: vec![0.0; k],
            stop: Stopping::new(threshold)?,
        })
    }

    pub fn with_solver(mut self, cfg: PowerIteration) -> Self {
        self.cfg = cfg;
        self
    }

    pub fn drift(&self) -> f64 {
        self.drift
    }

    pub fn window(&self) -> usize {
        self.wc.window()
    }

    /// Raw crossing time, i.e. the index of the scored observation.
    pub fn stopped_at_raw(&self) -> Option<usize> {
        self.stop.stopped_at.map(|t| t - self.wc.window())
    }

    /// `(ûᵀx_t)²` for the next scorable observation, without the drift.
    pub fn score(&mut self, x: &[f64]) -> Result<Option<f64>> {
        let evicted = match self.wc.push(x)? {
            Some(old) => {
                self.scored.copy_from_slice(old);
                true
            }
            None => false,
        };
        self.t += 1;
        if !evicted {
            return Ok(None);
        }
        let u_hat = &self.wc.leading_eigpair(self.cfg).vector;
        let p = dot(u_hat, &self.scored);
        Ok(Some(p * p))
    }
}

impl ReflectedStatistic for SubspaceCusum {
    fn increment(&mut self, x: &[f64]) -> Result<Option<f64>> {
        Ok(self.score(x)?.map(|s| s - self.drift))
    }
}

impl Detector for SubspaceCusum {
    fn dim(&self) -> usize {
        self.wc.dim()
    }

    fn lookahead(&self) -> usize {
        self.wc.window()
    }

    fn time(&self) -> usize {
        self.t
    }

    fn statistic(&self) -> Option<f64> {
        self.stat
    }

    fn advance(&mut self, x: &[f64]) -> Result<Option<f64>> {
        if let Some(inc) = self.increment(x)? {
            self.stat = Some(self.stat.unwrap_or(0.0).max(0.0) + inc);
        }
        Ok(if self.t > self.wc.window() { self.stat } else { None })
    }

    fn reset(&mut self) {
        self.wc.clear();
        self.stat = None;
        self.t = 0;
        self.stop.stopped_at = None;
    }

    super::stopping_methods!();
}
