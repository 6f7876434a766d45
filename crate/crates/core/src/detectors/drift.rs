use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{dot, leading_eigpair_or_dense, PowerIteration, SymMatrix};
use crate::rng::{derive_seed, Gaussian};

/// Smallest trial count accepted by [`DriftMode::MonteCarlo`].
pub const MIN_DRIFT_TRIALS: usize = 10_000;

/// Windows must be strictly longer than `(k−1)(1+ρ)/ρ²` for the upper drift
/// bound to exceed the lower one.
pub fn min_window_exclusive(rho_min: f64, k: usize) -> f64 {
    (k as f64 - 1.0) * (1.0 + rho_min) / (rho_min * rho_min)
}

/// Range of drifts that keep the Subspace-CUSUM increment negative before
/// the change and positive after it:
/// `[σ̂², σ̂²(1+ρ)(1 − (k−1)/(wρ))]` with `ρ = rho_min`.
pub fn drift_bounds(sigma2_hat: f64, rho_min: f64, w: usize, k: usize) -> Result<(f64, f64)> {
    if !(sigma2_hat > 0.0) || !sigma2_hat.is_finite() {
        return Err(Error::invalid("sigma2_hat", "must be positive and finite"));
    }
    if !(rho_min > 0.0) || !rho_min.is_finite() {
        return Err(Error::invalid("rho_min", "must be positive and finite"));
    }
    if k == 0 {
        return Err(Error::invalid("k", "must be at least 1"));
    }
    let min_w = min_window_exclusive(rho_min, k);
    if !(w as f64 > min_w) {
        return Err(Error::WindowTooSmall {
            window: w,
            min_exclusive: min_w,
        });
    }
    let upper =
        sigma2_hat * (1.0 + rho_min) * (1.0 - (k as f64 - 1.0) / (w as f64 * rho_min));
    Ok((sigma2_hat, upper))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum DriftMode {
    /// Midpoint of [`drift_bounds`].
    Average,
    /// Midpoint of `σ̂²` and a simulated post-change mean score.
    MonteCarlo { trials: usize, seed: u64 },
}

/// Drift for a Subspace-CUSUM tuned to signals of SNR at least `rho_min`.
///
/// The Monte-Carlo mode simulates `E₀[(ûᵀx)²]` with a spike of size
/// `σ̂² ρ_min` along a random direction (see [`scored_moment`]).
pub fn choose_drift(
    sigma2_hat: f64,
    rho_min: f64,
    w: usize,
    k: usize,
    mode: DriftMode,
) -> Result<f64> {
    match mode {
        DriftMode::Average => {
            let (lo, hi) = drift_bounds(sigma2_hat, rho_min, w, k)?;
            Ok(0.5 * (lo + hi))
        }
        DriftMode::MonteCarlo { trials, seed } => {
            if trials < MIN_DRIFT_TRIALS {
                return Err(Error::invalid(
                    "trials",
                    format!("Monte-Carlo drift needs at least {MIN_DRIFT_TRIALS} trials"),
                ));
            }
            if !(sigma2_hat > 0.0) || !(rho_min > 0.0) {
                return Err(Error::invalid("rho_min", "sigma2_hat and rho_min must be positive"));
            }
            let est = scored_moment(sigma2_hat, sigma2_hat * rho_min, k, w, trials, seed)?;
            Ok(0.5 * (sigma2_hat + est.mean))
        }
    }
}

/// Mean of `(ûᵀx)²` with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentEstimate {
    pub mean: f64,
    pub std_err: f64,
    pub trials: usize,
}

/// Simulates `E[(ûᵀx)²]` where `û` is the leading eigenvector of `w`
/// draws from `N(0, σ² I + θ u₀u₀ᵀ)` and `x` is one further independent draw
/// from the same law. `u₀` is a uniformly random direction drawn from
/// `seed`; `theta = 0` gives the pre-change moment `σ²`. Each trial uses
/// fresh data, so the trials are independent.
pub fn scored_moment(
    sigma2: f64,
    theta: f64,
    k: usize,
    w: usize,
    trials: usize,
    seed: u64,
) -> Result<MomentEstimate> {
    if k == 0 || w == 0 || trials < 2 {
        return Err(Error::invalid("trials", "need k, w >= 1 and at least two trials"));
    }
    let u0 = Gaussian::new(derive_seed(seed, u64::MAX)).unit_vector(k);
    let sigma = sigma2.sqrt();
    let a = theta.sqrt();
    let cfg = PowerIteration::for_dim(k);
    let scores: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut g = Gaussian::new(derive_seed(seed, i as u64));
            let mut x = vec![0.0; k];
            let mut draw = |x: &mut [f64]| {
                g.fill(x);
                let s = a * g.draw();
                for (v, u) in x.iter_mut().zip(&u0) {
                    *v = sigma * *v + s * u;
                }
            };
            let mut m = SymMatrix::zeros(k);
            for _ in 0..w {
                draw(&mut x);
                m.add_outer(&x, 1.0);
            }
            let u_hat = leading_eigpair_or_dense(&m, Some(&u0), cfg).vector;
            draw(&mut x);
            let p = dot(&u_hat, &x);
            p * p
        })
        .collect();
    let n = trials as f64;
    let mean = scores.iter().sum::<f64>() / n;
    let var = scores.iter().map(|s| (s - mean).powi(2)).sum::<f64>() / (n - 1.0);
    Ok(MomentEstimate {
        mean,
        std_err: (var / n).sqrt(),
        trials,
    })
}
