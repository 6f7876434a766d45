use serde::Serialize;

use super::tw::{tw_center_scale, tw_quantile, TW1_MEAN, TW1_SD};
use crate::error::{Error, Result};

const INV_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

/// Standard normal density.
pub fn normal_pdf(x: f64) -> f64 {
    INV_SQRT_2PI * (-0.5 * x * x).exp()
}

/// Standard normal distribution function, via `erfc` for tail accuracy.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / std::f64::consts::SQRT_2)
}

/// Threshold from the Tracy–Widom tail alone, ignoring correlation between
/// successive windows.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Prop1Threshold {
    pub b: f64,
    pub b_over_w: f64,
    /// Set when the target run length does not exceed the window, where the
    /// approximation has no footing.
    pub warning: Option<String>,
}

/// `b = σ_{w,k} b_p + μ_{w,k}` with `p = 1 / target_arl`.
pub fn threshold_prop1(target_arl: f64, w: usize, k: usize) -> Result<Prop1Threshold> {
    if !(target_arl > 1.0) || !target_arl.is_finite() {
        return Err(Error::invalid("target_arl", "must be finite and above 1"));
    }
    let c = tw_center_scale(w, k)?;
    let bp = tw_quantile(1.0 / target_arl)?;
    let b = c.sigma * bp + c.mu;
    let warning = (target_arl <= w as f64).then(|| {
        format!("target ARL {target_arl} does not exceed the window {w}; approximation unreliable")
    });
    Ok(Prop1Threshold {
        b,
        b_over_w: b / w as f64,
        warning,
    })
}

/// Local decorrelation rate of successive window statistics,
/// `1 + (2k^{1/3} + 3k^{1/6} c₁/√w + c₁²/w) / c₂²`.
pub fn beta_coefficient(k: usize, w: usize) -> Result<f64> {
    if k == 0 || w == 0 {
        return Err(Error::invalid("k", "k and w must be at least 1"));
    }
    let (k, w) = (k as f64, w as f64);
    let c1 = TW1_MEAN;
    let num = 2.0 * k.cbrt() + 3.0 * k.powf(1.0 / 6.0) * c1 / w.sqrt() + c1 * c1 / w;
    Ok(1.0 + num / (TW1_SD * TW1_SD))
}

/// Overshoot correction
/// `ν(x) = (2/x)(Φ(x/2) − ½) / ((x/2)Φ(x/2) + φ(x/2))`, with `ν(0) = 1`.
pub fn nu(x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::invalid("x", "nu is defined for x >= 0"));
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    let h = 0.5 * x;
    // (2/x)(Φ(x/2) − ½) = erf(x / (2√2)) / x, exact near 0.
    let num = libm::erf(h / std::f64::consts::SQRT_2) / x;
    Ok(num / (h * normal_cdf(h) + normal_pdf(h)))
}

/// Standardized threshold `b′ = (b − (σ c₁ + μ)) / (σ c₂)`.
pub fn standardized_threshold(b: f64, w: usize, k: usize) -> Result<f64> {
    let c = tw_center_scale(w, k)?;
    Ok((b - (c.sigma * c.c1 + c.mu)) / (c.sigma * c.c2))
}

/// Run length of the largest-eigenvalue rule accounting for the
/// correlation of successive windows:
/// `1 / (β b′ φ(b′) ν(b′√(2β)))`.
pub fn arl_prop2(b: f64, w: usize, k: usize) -> Result<f64> {
    let bp = standardized_threshold(b, w, k)?;
    if !(bp > 0.0) {
        return Err(Error::OutOfRange(format!(
            "standardized threshold b' = {bp} must be positive"
        )));
    }
    let beta = beta_coefficient(k, w)?;
    let rate = beta * bp * normal_pdf(bp) * nu(bp * (2.0 * beta).sqrt())?;
    Ok(1.0 / rate)
}

/// Inverse of [`arl_prop2`] in `b` over `[μ, μ + 20σ]`.
///
/// The formula is not monotone for `b′` below about 1, so the search starts
/// from the minimizer of the run length on that interval.
pub fn threshold_prop2(target_arl: f64, w: usize, k: usize) -> Result<f64> {
    if !(target_arl > 0.0) || !target_arl.is_finite() {
        return Err(Error::invalid("target_arl", "must be positive and finite"));
    }
    let c = tw_center_scale(w, k)?;
    let lnarl = |b: f64| arl_prop2(b, w, k).map(f64::ln);
    let (mut a, mut z) = (c.mu, c.mu + 20.0 * c.sigma);
    // Golden-section search for the minimum; ln ARL is unimodal here.
    let g = 0.5 * (5f64.sqrt() - 1.0);
    for _ in 0..200 {
        if z - a < 1e-10 * z {
            break;
        }
        let (p, q) = (z - g * (z - a), a + g * (z - a));
        if lnarl(p)? < lnarl(q)? {
            z = q;
        } else {
            a = p;
        }
    }
    let mut lo = 0.5 * (a + z);
    let mut hi = c.mu + 20.0 * c.sigma;
    let target = target_arl.ln();
    if target < lnarl(lo)? || target > lnarl(hi)? {
        return Err(Error::OutOfRange(format!(
            "target ARL {target_arl} outside [{}, {}] reachable on [mu, mu + 20 sigma]",
            lnarl(lo)?.exp(),
            lnarl(hi)?.exp()
        )));
    }
    while hi - lo > 1e-12 * hi {
        let mid = 0.5 * (lo + hi);
        if lnarl(mid)? < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Lower bound on `E₀[T_E]`: `2(b′ + e^{−b′} − 1) / (ρ − ln(1+ρ))` with
/// `b′ = (bρ − (1+ρ)σ² ln(1+ρ)) / (2σ²(1+ρ))`. Negative `b′` is clamped to
/// zero, where the bound is trivially 0.
pub fn edd_lower_bound(b: f64, rho: f64, sigma2: f64) -> Result<f64> {
    if !(rho > 0.0) || !rho.is_finite() {
        return Err(Error::invalid("rho", "must be positive and finite"));
    }
    if !(sigma2 > 0.0) || !sigma2.is_finite() {
        return Err(Error::invalid("sigma2", "must be positive and finite"));
    }
    let l = rho.ln_1p();
    let bp = ((b * rho - (1.0 + rho) * sigma2 * l) / (2.0 * sigma2 * (1.0 + rho))).max(0.0);
    // b′ + e^{−b′} − 1 without cancellation for small b′.
    let num = bp + (-bp).exp_m1();
    Ok(2.0 * num / (rho - l))
}
