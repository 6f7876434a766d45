//! Lazily extended statistic paths shared across thresholds.
//!
//! For a fixed trial seed the path of a detector statistic does not depend
//! on the threshold, so the stopping time for any `b` is the time of the
//! first running-maximum record at or above `b`. Each trial keeps its
//! records and its live state, and is only advanced further when a higher
//! threshold is asked for. All thresholds therefore see the same random
//! numbers and the estimated run length is monotone in `b`.

use rayon::prelude::*;

use crate::detectors::{Detector, ReflectedStatistic};
use crate::error::Result;
use crate::models::Sampler;

pub(crate) enum Advance {
    Below,
    Reached(f64),
    /// The path left through its lower boundary and will not continue.
    Ended,
}

pub(crate) trait PathSource: Send {
    /// Moves one step; reports the statistic only if it is at least `level`.
    fn advance(&mut self, level: f64) -> Result<Advance>;
    fn time(&self) -> usize;
}

/// A detector fed by a sampler. Time is observations consumed.
pub(crate) struct DetectorPath {
    det: Box<dyn Detector>,
    sampler: Sampler,
    x: Vec<f64>,
}

impl DetectorPath {
    pub(crate) fn new(det: Box<dyn Detector>, sampler: Sampler) -> Self {
        let x = vec![0.0; sampler.k()];
        Self { det, sampler, x }
    }
}

impl PathSource for DetectorPath {
    fn advance(&mut self, level: f64) -> Result<Advance> {
        self.sampler.next_into(&mut self.x);
        Ok(match self.det.scan(&self.x, level)? {
            Some(v) => Advance::Reached(v),
            None => Advance::Below,
        })
    }

    fn time(&self) -> usize {
        self.det.time()
    }
}

/// One SPRT cycle of a reflected statistic: the unreflected sum of
/// increments from 0 until it drops to 0 or below. Time counts scored
/// increments only, so look-ahead warm-up is excluded.
pub(crate) struct SprtPath {
    det: Box<dyn ReflectedStatistic>,
    sampler: Sampler,
    x: Vec<f64>,
    sum: f64,
    steps: usize,
}

impl SprtPath {
    pub(crate) fn new(det: Box<dyn ReflectedStatistic>, sampler: Sampler) -> Self {
        let x = vec![0.0; sampler.k()];
        Self {
            det,
            sampler,
            x,
            sum: 0.0,
            steps: 0,
        }
    }
}

impl PathSource for SprtPath {
    fn advance(&mut self, level: f64) -> Result<Advance> {
        let inc = loop {
            self.sampler.next_into(&mut self.x);
            if let Some(inc) = self.det.increment(&self.x)? {
                break inc;
            }
        };
        self.steps += 1;
        self.sum += inc;
        Ok(if self.sum <= 0.0 {
            Advance::Ended
        } else if self.sum >= level {
            Advance::Reached(self.sum)
        } else {
            Advance::Below
        })
    }

    fn time(&self) -> usize {
        self.steps
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Passage {
    Hit(usize),
    Ended(usize),
    Censored,
}

pub(crate) struct RecordPath {
    src: Box<dyn PathSource>,
    records: Vec<(usize, f64)>,
    max: f64,
    ended: Option<usize>,
}

impl RecordPath {
    pub(crate) fn new(src: Box<dyn PathSource>) -> Self {
        Self {
            src,
            records: Vec::new(),
            max: f64::NEG_INFINITY,
            ended: None,
        }
    }

    fn extend(&mut self, level: f64, cap: usize) -> Result<()> {
        while self.max < level && self.ended.is_none() && self.src.time() < cap {
            match self.src.advance(self.max)? {
                Advance::Reached(v) if v > self.max => {
                    self.records.push((self.src.time(), v));
                    self.max = v;
                }
                Advance::Reached(_) | Advance::Below => {}
                Advance::Ended => self.ended = Some(self.src.time()),
            }
        }
        Ok(())
    }

    fn passage(&self, level: f64, cap: usize) -> Passage {
        let i = self.records.partition_point(|r| r.1 < level);
        match self.records.get(i) {
            Some(&(t, _)) if t <= cap => Passage::Hit(t),
            _ => match self.ended {
                Some(t) => Passage::Ended(t),
                None => Passage::Censored,
            },
        }
    }
}

/// Independent trials evaluated together for a sequence of thresholds.
pub(crate) struct Ensemble {
    paths: Vec<RecordPath>,
    cap: usize,
}

impl Ensemble {
    pub(crate) fn new<F>(trials: usize, cap: usize, make: F) -> Result<Self>
    where
        F: Fn(u64) -> Result<Box<dyn PathSource>> + Sync,
    {
        let paths = (0..trials as u64)
            .into_par_iter()
            .map(|i| make(i).map(RecordPath::new))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { paths, cap })
    }

    pub(crate) fn len(&self) -> usize {
        self.paths.len()
    }

    pub(crate) fn cap(&self) -> usize {
        self.cap
    }

    /// First passages at `level`, in trial order.
    pub(crate) fn passages(&mut self, level: f64) -> Result<Vec<Passage>> {
        let cap = self.cap;
        self.paths
            .par_iter_mut()
            .map(|p| {
                p.extend(level, cap)?;
                Ok(p.passage(level, cap))
            })
            .collect()
    }
}
