use crate::error::{check_dim, Error, Result};
use crate::linalg::dot;
use crate::models::SpikedModel;

use super::{Detector, ReflectedStatistic, Stopping};

/// `σ² (1 + 1/ρ) ln(1 + ρ)`, the root of the CUSUM increment in `(uᵀx)²`.
pub fn cusum_drift(model: &SpikedModel) -> Result<f64> {
    let rho = model.rho();
    if !(rho > 0.0) {
        return Err(Error::invalid("theta", "exact CUSUM needs a nonzero spike"));
    }
    Ok(model.sigma2() * (1.0 + 1.0 / rho) * rho.ln_1p())
}

/// Log-likelihood ratio `ln f₀(x) / f_∞(x)` of one observation,
/// `ρ / (2σ²(1+ρ)) · ((uᵀx)² − d)`.
pub fn cusum_loglr(x: &[f64], model: &SpikedModel) -> Result<f64> {
    check_dim(model.k(), x.len())?;
    let d = cusum_drift(model)?;
    let rho = model.rho();
    let proj = dot(model.u(), x);
    Ok(rho / (2.0 * model.sigma2() * (1.0 + rho)) * (proj * proj - d))
}

/// Exact CUSUM for a known spike.
///
/// Runs `S_t = max(S_{t-1}, 0) + (uᵀx_t)² − d` from `S_0 = 0` and stops at
/// the first `t` with `S_t ≥ b`. The positive factor of the log-likelihood
/// ratio is dropped, so `b` lives on the `(uᵀx)²` scale.
#[derive(Debug, Clone)]
pub struct Cusum {
    model: SpikedModel,
    drift: f64,
    stat: f64,
    t: usize,
    stop: Stopping,
}

impl Cusum {
    pub fn new(model: SpikedModel, threshold: f64) -> Result<Self> {
        let drift = cusum_drift(&model)?;
        Ok(Self {
            model,
            drift,
            stat: 0.0,
            t: 0,
            stop: Stopping::new(threshold)?,
        })
    }

    pub fn model(&self) -> &SpikedModel {
        &self.model
    }

    pub fn drift(&self) -> f64 {
        self.drift
    }
}

impl ReflectedStatistic for Cusum {
    fn increment(&mut self, x: &[f64]) -> Result<Option<f64>> {
        check_dim(self.model.k(), x.len())?;
        self.t += 1;
        let p = dot(self.model.u(), x);
        Ok(Some(p * p - self.drift))
    }
}

impl Detector for Cusum {
    fn dim(&self) -> usize {
        self.model.k()
    }

    fn time(&self) -> usize {
        self.t
    }

    fn statistic(&self) -> Option<f64> {
        (self.t > 0).then_some(self.stat)
    }

    fn advance(&mut self, x: &[f64]) -> Result<Option<f64>> {
        let inc = self.increment(x)?.expect("CUSUM scores every observation");
        self.stat = self.stat.max(0.0) + inc;
        Ok(Some(self.stat))
    }

    fn reset(&mut self) {
        self.stat = 0.0;
        self.t = 0;
        self.stop.stopped_at = None;
    }

    super::stopping_methods!();
}
