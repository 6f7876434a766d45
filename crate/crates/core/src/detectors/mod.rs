//! The three stopping rules behind one [`Detector`] interface.

mod cusum;
mod drift;
mod eig;
mod subspace_cusum;

use std::io::Write;

use serde::{Deserialize, Serialize};

pub use cusum::{cusum_drift, cusum_loglr, Cusum};
pub use drift::{
    choose_drift, drift_bounds, min_window_exclusive, scored_moment, DriftMode, MomentEstimate,
    MIN_DRIFT_TRIALS,
};
pub use eig::LargestEigenvalue;
pub use subspace_cusum::SubspaceCusum;

use crate::error::{Error, Result};
use crate::models::SpikedModel;

/// An online stopping rule fed one observation at a time.
///
/// Time is the number of observations consumed, so a stop reported by
/// [`Detector::stopped_at`] is always the arrival time of the observation
/// that triggered it.
pub trait Detector: Send + std::fmt::Debug {
    fn dim(&self) -> usize;

    /// Observations that must arrive after `x_t` before `x_t` is scored.
    fn lookahead(&self) -> usize {
        0
    }

    fn time(&self) -> usize;

    /// Statistic after the last update, `None` before the first one.
    fn statistic(&self) -> Option<f64>;

    /// Consumes `x` and updates the statistic, ignoring the threshold.
    fn advance(&mut self, x: &[f64]) -> Result<Option<f64>>;

    /// Like [`Detector::advance`] but only reports the statistic when it is
    /// at least `level`. Detectors may skip work when it is not.
    fn scan(&mut self, x: &[f64], level: f64) -> Result<Option<f64>> {
        Ok(self.advance(x)?.filter(|&s| s >= level))
    }

    fn threshold(&self) -> f64;

    fn set_threshold(&mut self, b: f64) -> Result<()>;

    fn stopped_at(&self) -> Option<usize>;

    /// Consumes `x`, updates the statistic and stops once it reaches the
    /// threshold. Errors after a stop.
    fn step(&mut self, x: &[f64]) -> Result<Option<f64>>;

    /// Back to the state before the first observation.
    fn reset(&mut self);
}

/// Detectors whose statistic is `max(S, 0)` plus an increment.
pub trait ReflectedStatistic: Detector {
    /// Consumes `x` and returns the next increment without touching the
    /// running statistic; `None` while no observation is scorable yet.
    fn increment(&mut self, x: &[f64]) -> Result<Option<f64>>;
}

#[derive(Debug, Clone)]
pub(crate) struct Stopping {
    pub(crate) threshold: f64,
    pub(crate) stopped_at: Option<usize>,
}

impl Stopping {
    pub(crate) fn new(threshold: f64) -> Result<Self> {
        check_threshold(threshold)?;
        Ok(Self {
            threshold,
            stopped_at: None,
        })
    }
}

fn check_threshold(b: f64) -> Result<()> {
    if b.is_nan() {
        return Err(Error::invalid("threshold", "must not be NaN"));
    }
    Ok(())
}

macro_rules! stopping_methods {
    () => {
        fn threshold(&self) -> f64 {
            self.stop.threshold
        }

        fn set_threshold(&mut self, b: f64) -> $crate::error::Result<()> {
            self.stop = $crate::detectors::Stopping::new(b)?;
            Ok(())
        }

        fn stopped_at(&self) -> Option<usize> {
            self.stop.stopped_at
        }

        fn step(&mut self, x: &[f64]) -> $crate::error::Result<Option<f64>> {
            if let Some(t) = self.stop.stopped_at {
                return Err($crate::error::Error::AlreadyStopped(t));
            }
            let s = self.advance(x)?;
            if matches!(s, Some(v) if v >= self.stop.threshold) {
                self.stop.stopped_at = Some(self.time());
            }
            Ok(s)
        }
    };
}
pub(crate) use stopping_methods;

/// Serializable description of a detector, minus its threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DetectorSpec {
    Cusum { model: SpikedModel },
    LargestEigenvalue { k: usize, w: usize },
    SubspaceCusum { k: usize, w: usize, drift: f64 },
}

impl DetectorSpec {
    pub fn name(&self) -> &'static str {
        match self {
            DetectorSpec::Cusum { .. } => "cusum",
            DetectorSpec::LargestEigenvalue { .. } => "largest_eigenvalue",
            DetectorSpec::SubspaceCusum { .. } => "subspace_cusum",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            DetectorSpec::Cusum { model } => model.k(),
            DetectorSpec::LargestEigenvalue { k, .. } | DetectorSpec::SubspaceCusum { k, .. } => *k,
        }
    }

    pub fn window(&self) -> Option<usize> {
        match self {
            DetectorSpec::Cusum { .. } => None,
            DetectorSpec::LargestEigenvalue { w, .. } | DetectorSpec::SubspaceCusum { w, .. } => {
                Some(*w)
            }
        }
    }

    /// Look-ahead in observations; only Subspace-CUSUM has one.
    pub fn lookahead(&self) -> usize {
        match self {
            DetectorSpec::SubspaceCusum { w, .. } => *w,
            _ => 0,
        }
    }

    pub fn build(&self, threshold: f64) -> Result<Box<dyn Detector>> {
        Ok(match self {
            DetectorSpec::Cusum { model } => Box::new(Cusum::new(model.clone(), threshold)?),
            DetectorSpec::LargestEigenvalue { k, w } => {
                Box::new(LargestEigenvalue::new(*k, *w, threshold)?)
            }
            DetectorSpec::SubspaceCusum { k, w, drift } => {
                Box::new(SubspaceCusum::new(*k, *w, *drift, threshold)?)
            }
        })
    }

    /// The CUSUM-family detectors; errors for the eigenvalue rule.
    pub fn build_reflected(&self, threshold: f64) -> Result<Box<dyn ReflectedStatistic>> {
        match self {
            DetectorSpec::Cusum { model } => Ok(Box::new(Cusum::new(model.clone(), threshold)?)),
            DetectorSpec::SubspaceCusum { k, w, drift } => {
                Ok(Box::new(SubspaceCusum::new(*k, *w, *drift, threshold)?))
            }
            DetectorSpec::LargestEigenvalue { .. } => Err(Error::invalid(
                "detector",
                "the largest-eigenvalue rule has no reflected statistic",
            )),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.build(0.0).map(|_| ())
    }
}

/// One row of a statistic trace.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TraceRow {
    pub t: usize,
    pub statistic: Option<f64>,
    pub threshold: f64,
    pub stopped: bool,
}

/// Feeds `xs` to `det` until it stops or the input runs out.
pub fn trace<'a, I>(det: &mut dyn Detector, xs: I) -> Result<Vec<TraceRow>>
where
    I: IntoIterator<Item = &'a [f64]>,
{
    let mut rows = Vec::new();
    for x in xs {
        if det.stopped_at().is_some() {
            break;
        }
        let statistic = det.step(x)?;
        rows.push(TraceRow {
            t: det.time(),
            statistic,
            threshold: det.threshold(),
            stopped: det.stopped_at().is_some(),
        });
    }
    Ok(rows)
}

/// Writes a trace as CSV with columns `t,statistic,threshold,stopped`.
/// Missing statistics (warm-up) are left empty.
pub fn write_trace_csv<W: Write>(out: W, rows: &[TraceRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t", "statistic", "threshold", "stopped"])?;
    for r in rows {
        w.write_record([
            r.t.to_string(),
            r.statistic.map(crate::io::fmt_sig).unwrap_or_default(),
            crate::io::fmt_sig(r.threshold),
            (r.stopped as u8).to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
