//! Sequential detection of a rank-one change in the covariance of a
//! Gaussian stream.
//!
//! Three detectors share the [`Detector`] interface:
//!
//! * [`Cusum`], the exact CUSUM that knows the post-change spike,
//! * [`LargestEigenvalue`], which thresholds the largest eigenvalue of the
//!   sliding-window sample covariance,
//! * [`SubspaceCusum`], a CUSUM that estimates the spike direction from a
//!   window of look-ahead samples.
//!
//! [`theory`] holds the Tracy–Widom based run-length approximations and
//! [`calibration`] the Monte-Carlo machinery for estimating run lengths and
//! detection delays and for choosing thresholds.
//!
//! ```
//! use subspace_cpd::{ChangeTime, Cusum, Detector, Sampler, SpikedModel};
//!
//! let model = SpikedModel::axis(5, 1.0, 1.0, 0)?;
//! let mut det = Cusum::new(model.clone(), 30.0)?;
//! let mut stream = Sampler::new(&model, ChangeTime::At(100), 7);
//! let mut x = vec![0.0; 5];
//! while det.stopped_at().is_none() {
//!     stream.next_into(&mut x);
//!     det.step(&x)?;
//! }
//! assert!(det.stopped_at().unwrap() > 0);
//! # Ok::<(), subspace_cpd::Error>(())
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod calibration;
pub mod detectors;
mod error;
pub mod io;
pub mod linalg;
pub mod models;
pub mod rng;
pub mod theory;

pub use detectors::{
    Cusum, Detector, DetectorSpec, DriftMode, LargestEigenvalue, SubspaceCusum,
};
pub use error::{Error, Result};
pub use models::{ChangeTime, Sampler, SpikedModel, StreamSpec, SwitchSpec};
