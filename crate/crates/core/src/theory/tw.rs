use serde::Serialize;

use super::tw1_table::{TW1_TABLE, TW1_X_MIN, TW1_X_STEP};
use crate::error::{Error, Result};

/// `E[W₁]` rounded as in the threshold formulas.
pub const TW1_MEAN: f64 = -1.21;
/// `sd(W₁)` rounded as in the threshold formulas.
pub const TW1_SD: f64 = 1.27;

/// Probabilities accepted by [`tw_quantile`], exclusive.
pub const QUANTILE_SUPPORT: (f64, f64) = (1e-6, 1.0 - 1e-6);

// Interpolate ln F below this point and ln(1 − F) above it, so each side
// works with the tail that carries relative precision.
const SWITCH_X: f64 = -1.25;

/// Centering and scaling of the largest eigenvalue of a `w`-sample
/// un-normalized covariance in dimension `k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TwConstants {
    /// `(√(w−1) + √k)²`.
    pub mu: f64,
    /// `(√(w−1) + √k)(1/√(w−1) + 1/√k)^{1/3}`.
    pub sigma: f64,
    pub c1: f64,
    pub c2: f64,
}

pub fn tw_center_scale(w: usize, k: usize) -> Result<TwConstants> {
    if w < 2 {
        return Err(Error::invalid("w", "must be at least 2"));
    }
    if k < 1 {
        return Err(Error::invalid("k", "must be at least 1"));
    }
    let a = ((w - 1) as f64).sqrt();
    let b = (k as f64).sqrt();
    Ok(TwConstants {
        mu: (a + b) * (a + b),
        sigma: (a + b) * (1.0 / a + 1.0 / b).cbrt(),
        c1: TW1_MEAN,
        c2: TW1_SD,
    })
}

/// Fritsch–Carlson slopes of a monotone cubic Hermite interpolant on a
/// uniform grid with spacing `h`.
fn pchip_slopes(y: &[f64], h: f64) -> Vec<f64> {
    let n = y.len();
    let delta: Vec<f64> = y.windows(2).map(|p| (p[1] - p[0]) / h).collect();
    let mut m = vec![0.0; n];
    for i in 1..n - 1 {
        let (a, b) = (delta[i - 1], delta[i]);
        m[i] = if a * b <= 0.0 { 0.0 } else { 2.0 * a * b / (a + b) };
    }
    let end = |d0: f64, d1: f64| {
        let s = (3.0 * d0 - d1) / 2.0;
        if s * d0 <= 0.0 {
            0.0
        } else if d0 * d1 <= 0.0 && s.abs() > 3.0 * d0.abs() {
            3.0 * d0
        } else {
            s
        }
    };
    m[0] = end(delta[0], delta[1]);
    m[n - 1] = end(delta[n - 2], delta[n - 3]);
    m
}

struct LogTable {
    left_x0: f64,
    left: Vec<f64>,
    left_m: Vec<f64>,
    right_x0: f64,
    right: Vec<f64>,
    right_m: Vec<f64>,
}

fn log_table() -> &'static LogTable {
    use std::sync::OnceLock;
    static T: OnceLock<LogTable> = OnceLock::new();
    T.get_or_init(|| {
        let split = TW1_TABLE
            .iter()
            .position(|r| (r.0 - SWITCH_X).abs() < 1e-9)
            .expect("switch point is a grid node");
        let left: Vec<f64> = TW1_TABLE[..=split].iter().map(|r| r.1.ln()).collect();
        let right: Vec<f64> = TW1_TABLE[split..].iter().map(|r| r.2.ln()).collect();
        LogTable {
            left_x0: TW1_X_MIN,
            left_m: pchip_slopes(&left, TW1_X_STEP),
            left,
            right_x0: TW1_TABLE[split].0,
            right_m: pchip_slopes(&right, TW1_X_STEP),
            right,
        }
    })
}

fn hermite(y: &[f64], m: &[f64], x0: f64, x: f64) -> f64 {
    let h = TW1_X_STEP;
    let pos = (x - x0) / h;
    let i = (pos.floor() as usize).min(y.len() - 2);
    let s = pos - i as f64;
    let (s2, s3) = (s * s, s * s * s);
    (2.0 * s3 - 3.0 * s2 + 1.0) * y[i]
        + (s3 - 2.0 * s2 + s) * h * m[i]
        + (-2.0 * s3 + 3.0 * s2) * y[i + 1]
        + (s3 - s2) * h * m[i + 1]
}

fn x_max() -> f64 {
    TW1_TABLE[TW1_TABLE.len() - 1].0
}

/// `ln P(W₁ ≤ x)` for `x ≤ -1.25`. Beyond the table the left-tail
/// asymptote `ln F₁(x) ~ −|x|³/24` is glued on.
fn ln_cdf_left(x: f64) -> f64 {
    let t = log_table();
    if x < t.left_x0 {
        return t.left[0] - (x.abs().powi(3) - t.left_x0.abs().powi(3)) / 24.0;
    }
    hermite(&t.left, &t.left_m, t.left_x0, x)
}

/// `ln P(W₁ > x)` for `x ≥ -1.25`, with the right-tail asymptote
/// `ln(1 − F₁(x)) ~ −(2/3) x^{3/2}` past the table.
fn ln_sf_right(x: f64) -> f64 {
    let t = log_table();
    let hi = x_max();
    if x > hi {
        return t.right[t.right.len() - 1] - 2.0 / 3.0 * (x.powf(1.5) - hi.powf(1.5));
    }
    hermite(&t.right, &t.right_m, t.right_x0, x)
}

/// `P(W₁ ≤ x)` for the Tracy–Widom law of order one.
pub fn tw1_cdf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x <= SWITCH_X {
        ln_cdf_left(x).exp()
    } else {
        -ln_sf_right(x).exp_m1()
    }
}

/// `P(W₁ > x)`.
pub fn tw1_sf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x <= SWITCH_X {
        -ln_cdf_left(x).exp_m1()
    } else {
        ln_sf_right(x).exp()
    }
}

/// Upper `p` point `b_p` of `W₁`: `P(W₁ ≥ b_p) = p`.
pub fn tw_quantile(p: f64) -> Result<f64> {
    let (lo_p, hi_p) = QUANTILE_SUPPORT;
    if !(p > lo_p && p < hi_p) {
        return Err(Error::OutOfRange(format!(
            "tail probability {p} outside ({lo_p:e}, 1 - {lo_p:e})"
        )));
    }
    let (mut lo, mut hi) = (TW1_X_MIN, x_max());
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if tw1_sf(mid) > p {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-13 {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Mean and standard deviation implied by the embedded table, by Simpson's
/// rule over the grid. Uses `E[g(W)] = g(a) + ∫ g'(x) P(W > x) dx` from the
/// left end `a`, which keeps the integrand smooth.
pub fn tw1_table_moments() -> (f64, f64) {
    let n = TW1_TABLE.len();
    debug_assert!(n % 2 == 1);
    let a = TW1_X_MIN;
    let simpson = |f: &dyn Fn(f64, f64) -> f64| {
        let mut s = 0.0;
        for (i, &(x, _, sf)) in TW1_TABLE.iter().enumerate() {
            let wgt = if i == 0 || i == n - 1 {
                1.0
            } else if i % 2 == 1 {
                4.0
            } else {
                2.0
            };
            s += wgt * f(x, sf);
        }
        s * TW1_X_STEP / 3.0
    };
    let shifted_mean = simpson(&|_, sf| sf);
    let shifted_second = simpson(&|x, sf| 2.0 * (x - a) * sf);
    let sd = (shifted_second - shifted_mean * shifted_mean).sqrt();
    (a + shifted_mean, sd)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_small_case() {
        let c = tw_center_scale(2, 1).unwrap();
        assert!((c.mu - 4.0).abs() < 1e-12);
        assert!((c.sigma - 2.0 * 2f64.cbrt()).abs() < 1e-12);
        assert!(tw_center_scale(1, 1).is_err());
    }

    #[test]
    fn table_nodes_are_reproduced() {
        for &(x, cdf, sf) in TW1_TABLE.iter().step_by(7) {
            assert!((tw1_cdf(x) - cdf).abs() < 1e-14 + 1e-12 * cdf);
            assert!((tw1_sf(x) - sf).abs() < 1e-14 + 1e-12 * sf);
        }
    }

    #[test]
    fn tails_of_table() {
        // The law itself has F₁(−6) ≈ 2.7e-6 and 1 − F₁(6) ≈ 1.9e-6, so the
        // grid runs to ±8 to cover the quantile support.
        assert!(tw1_cdf(TW1_X_MIN) < 1e-6);
        assert!(tw1_cdf(x_max()) > 1.0 - 1e-6);
        assert!((tw1_cdf(-6.0) / 2.7073e-6 - 1.0).abs() < 1e-3);
        assert!(tw1_cdf(-20.0) >= 0.0 && tw1_sf(20.0) >= 0.0);
        assert!(tw1_cdf(-20.0) < tw1_cdf(-8.0) && tw1_sf(20.0) < tw1_sf(8.0));
    }

    #[test]
    fn table_moments_match_the_law() {
        let (mean, sd) = tw1_table_moments();
        assert!((mean + 1.2065335745820).abs() < 1e-6);
        assert!((sd - 1.607781034581f64.sqrt()).abs() < 1e-6);
    }

    #[test]
    fn quantile_support() {
        assert!(tw_quantile(1e-6).is_err());
        assert!(tw_quantile(0.0).is_err());
        assert!(tw_quantile(1.0).is_err());
        assert!(tw_quantile(2e-6).is_ok());
    }
}
