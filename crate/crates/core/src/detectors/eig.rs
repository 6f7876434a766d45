use crate::error::Result;
use crate::linalg::{PowerIteration, WindowCovariance};

use super::{Detector, Stopping};

/// Stops when the largest eigenvalue of the un-normalized window covariance
/// `Σ_{i} x_i x_iᵀ` over the last `min(t, w)` observations reaches `b`.
#[derive(Debug, Clone)]
pub struct LargestEigenvalue {
    wc: WindowCovariance,
    cfg: PowerIteration,
    stat: Option<f64>,
    t: usize,
    stop: Stopping,
}

impl LargestEigenvalue {
    pub fn new(k: usize, w: usize, threshold: f64) -> Result<Self> {
        Ok(Self {
            wc: WindowCovariance::new(k, w)?,
            cfg: PowerIteration::for_dim(k),
            stat: None,
            t: 0,
            stop: Stopping::new(threshold)?,
        })
    }

    pub fn with_solver(mut self, cfg: PowerIteration) -> Self {
        self.cfg = cfg;
        self
    }

    pub fn window(&self) -> &WindowCovariance {
        &self.wc
    }
}

impl Detector for LargestEigenvalue {
    fn dim(&self) -> usize {
        self.wc.dim()
    }

    fn time(&self) -> usize {
        self.t
    }

    fn statistic(&self) -> Option<f64> {
        self.stat
    }

    fn advance(&mut self, x: &[f64]) -> Result<Option<f64>> {
        self.wc.push(x)?;
        self.t += 1;
        let v = self.wc.leading_eigpair(self.cfg).value;
        self.stat = Some(v);
        Ok(self.stat)
    }

    /// A Cholesky factorization of `level·I − Σ̂` rules out a crossing
    /// without an eigen solve; the exact value is computed only otherwise.
    /// When nothing is computed [`Detector::statistic`] returns `None`.
    fn scan(&mut self, x: &[f64], level: f64) -> Result<Option<f64>> {
        self.wc.push(x)?;
        self.t += 1;
        if !self.wc.largest_eigenvalue_reaches(level) {
            self.stat = None;
            return Ok(None);
        }
        let v = self.wc.leading_eigpair(self.cfg).value;
        self.stat = Some(v);
        Ok((v >= level).then_some(v))
    }

    fn reset(&mut self) {
        self.wc.clear();
        self.stat = None;
        self.t = 0;
        self.stop.stopped_at = None;
    }

    super::stopping_methods!();
}
