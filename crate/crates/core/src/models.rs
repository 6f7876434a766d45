//! Gaussian data for the emerging-subspace and switching-subspace problems.
//!
//! Before the change every observation is `N(0, σ² I_k)`; after it the
//! covariance gains a rank-one spike `θ u uᵀ`. The switching problem, where
//! the spike moves from `u₁` to `u₂`, is turned into an emerging one by
//! projecting onto the orthogonal complement of `u₁`.

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::linalg::{dot, norm, SymMatrix};
use crate::rng::Gaussian;

const UNIT_TOL: f64 = 1e-10;

/// Below this the projected spike is treated as absent.
pub const UNDETECTABLE_THETA: f64 = 1e-12;

fn check_unit(name: &'static str, u: &[f64]) -> Result<()> {
    if u.is_empty() {
        return Err(Error::invalid(name, "vector is empty"));
    }
    let n = norm(u);
    if (n - 1.0).abs() > UNIT_TOL {
        return Err(Error::invalid(name, format!("must have unit norm, got {n}")));
    }
    Ok(())
}

/// `N(0, σ² I_k + θ u uᵀ)` after the change, `N(0, σ² I_k)` before it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawModel", into = "RawModel")]
pub struct SpikedModel {
    sigma2: f64,
    theta: f64,
    u: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct RawModel {
    sigma2: f64,
    theta: f64,
    u: Vec<f64>,
}

impl TryFrom<RawModel> for SpikedModel {
    type Error = Error;
    fn try_from(r: RawModel) -> Result<Self> {
        SpikedModel::new(r.sigma2, r.theta, r.u)
    }
}

impl From<SpikedModel> for RawModel {
    fn from(m: SpikedModel) -> Self {
        RawModel {
            sigma2: m.sigma2,
            theta: m.theta,
            u: m.u,
        }
    }
}

impl SpikedModel {
    pub fn new(sigma2: f64, theta: f64, u: Vec<f64>) -> Result<Self> {
        if !(sigma2 > 0.0) || !sigma2.is_finite() {
            return Err(Error::invalid("sigma2", "must be positive and finite"));
        }
        if !(theta >= 0.0) || !theta.is_finite() {
            return Err(Error::invalid("theta", "must be nonnegative and finite"));
        }
        check_unit("u", &u)?;
        Ok(Self { sigma2, theta, u })
    }

    /// Spike along the `axis`-th coordinate vector of `R^k`.
    pub fn axis(k: usize, sigma2: f64, theta: f64, axis: usize) -> Result<Self> {
        if axis >= k {
            return Err(Error::invalid("axis", format!("must be below k = {k}")));
        }
        let mut u = vec![0.0; k];
        u[axis] = 1.0;
        Self::new(sigma2, theta, u)
    }

    pub fn k(&self) -> usize {
        self.u.len()
    }

    pub fn sigma2(&self) -> f64 {
        self.sigma2
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn u(&self) -> &[f64] {
        &self.u
    }

    /// Signal-to-noise ratio `θ / σ²`.
    pub fn rho(&self) -> f64 {
        self.theta / self.sigma2
    }

    /// Post-change covariance.
    pub fn covariance(&self) -> SymMatrix {
        SymMatrix::spiked(self.sigma2, self.theta, &self.u)
    }
}

/// When the change happens. Observation `t` (counted from 1) is post-change
/// iff `t > τ`, so `At(0)` makes the whole stream post-change and `Never` the
/// whole stream pre-change.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChangeTime {
    At(usize),
    Never,
}

impl ChangeTime {
    #[inline]
    pub fn is_post_change(self, t: usize) -> bool {
        match self {
            ChangeTime::At(tau) => t > tau,
            ChangeTime::Never => false,
        }
    }
}

/// Unbounded observation source for one regime switch.
///
/// Each observation draws `k` normals `z` and one more normal `g`, and
/// returns `σ z` before the change and `σ z + √θ g u` after it. `g` is drawn
/// in both regimes so that streams with the same seed but different change
/// times share their noise.
#[derive(Debug, Clone)]
pub struct Sampler {
    sigma: f64,
    sqrt_theta: f64,
    pre_u: Option<Vec<f64>>,
    post_u: Vec<f64>,
    tau: ChangeTime,
    t: usize,
    rng: Gaussian,
}

impl Sampler {
    pub fn new(model: &SpikedModel, tau: ChangeTime, seed: u64) -> Self {
        Self {
            sigma: model.sigma2.sqrt(),
            sqrt_theta: model.theta.sqrt(),
            pre_u: None,
            post_u: model.u.clone(),
            tau,
            t: 0,
            rng: Gaussian::new(seed),
        }
    }

    /// Pure noise `N(0, σ² I_k)` forever.
    pub fn null(k: usize, sigma2: f64, seed: u64) -> Self {
        Self {
            sigma: sigma2.sqrt(),
            sqrt_theta: 0.0,
            pre_u: None,
            post_u: vec![0.0; k],
            tau: ChangeTime::Never,
            t: 0,
            rng: Gaussian::new(seed),
        }
    }

    pub fn k(&self) -> usize {
        self.post_u.len()
    }

    /// Index of the last observation produced.
    pub fn time(&self) -> usize {
        self.t
    }

    /// Writes the next observation into `out`.
    #[inline]
    pub fn next_into(&mut self, out: &mut [f64]) {
        self.t += 1;
        self.rng.fill(out);
        let g = self.rng.draw();
        for v in out.iter_mut() {
            *v *= self.sigma;
        }
        let u = if self.tau.is_post_change(self.t) {
            Some(&self.post_u)
        } else {
            self.pre_u.as_ref()
        };
        if let Some(u) = u {
            let a = self.sqrt_theta * g;
            for (v, ui) in out.iter_mut().zip(u) {
                *v += a * ui;
            }
        }
    }

    pub fn next_vec(&mut self) -> Vec<f64> {
        let mut out = vec![0.0; self.k()];
        self.next_into(&mut out);
        out
    }
}

/// A finite stream from a [`SpikedModel`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StreamSpec {
    pub model: SpikedModel,
    pub tau: ChangeTime,
    pub n: usize,
    pub seed: u64,
}

impl StreamSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::invalid("n", "stream length must be at least 1"));
        }
        Ok(())
    }

    pub fn sampler(&self) -> Sampler {
        Sampler::new(&self.model, self.tau, self.seed)
    }

    /// All `n` observations; bit-identical for equal specs.
    pub fn generate(&self) -> Result<Vec<Vec<f64>>> {
        self.validate()?;
        let mut s = self.sampler();
        Ok((0..self.n).map(|_| s.next_vec()).collect())
    }
}

/// Spike switching from `u1` to `u2` at `tau`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SwitchSpec {
    pub sigma2: f64,
    pub theta: f64,
    pub u1: Vec<f64>,
    pub u2: Vec<f64>,
    pub tau: ChangeTime,
    pub n: usize,
    pub seed: u64,
}

impl SwitchSpec {
    pub fn validate(&self) -> Result<()> {
        SpikedModel::new(self.sigma2, self.theta, self.u1.clone())?;
        check_unit("u2", &self.u2)?;
        check_dim(self.u1.len(), self.u2.len())?;
        if self.u1.len() < 2 {
            return Err(Error::invalid("u1", "switching needs k >= 2"));
        }
        if self.n == 0 {
            return Err(Error::invalid("n", "stream length must be at least 1"));
        }
        Ok(())
    }

    pub fn sampler(&self) -> Result<Sampler> {
        self.validate()?;
        let post = SpikedModel::new(self.sigma2, self.theta, self.u2.clone())?;
        let mut s = Sampler::new(&post, self.tau, self.seed);
        s.pre_u = Some(self.u1.clone());
        Ok(s)
    }

    pub fn generate(&self) -> Result<Vec<Vec<f64>>> {
        let mut s = self.sampler()?;
        Ok((0..self.n).map(|_| s.next_vec()).collect())
    }
}

/// `(k-1) × k` matrix with orthonormal rows spanning the complement of `u₁`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Projection {
    rows: Vec<Vec<f64>>,
}

impl Projection {
    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    /// Input dimension `k`.
    pub fn k(&self) -> usize {
        self.rows[0].len()
    }

    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>> {
        check_dim(self.k(), x.len())?;
        Ok(self.rows.iter().map(|r| dot(r, x)).collect())
    }
}

/// Householder reflector `H` with `H u₁ = ∓e₁`, minus its first row.
///
/// `H` is symmetric and orthogonal, and `(H u₁)_i = 0` for `i ≥ 1`, so the
/// remaining rows are orthonormal and orthogonal to `u₁`. The sign of `v` is
/// chosen to avoid cancellation.
pub fn build_projection(u1: &[f64]) -> Result<Projection> {
    let k = u1.len();
    if k < 2 {
        return Err(Error::invalid("u1", "projection needs k >= 2"));
    }
    let n = norm(u1);
    if !(n > 0.0) || !n.is_finite() {
        return Err(Error::invalid("u1", "zero or non-finite vector"));
    }
    let mut v: Vec<f64> = u1.iter().map(|x| x / n).collect();
    v[0] += if v[0] >= 0.0 { 1.0 } else { -1.0 };
    let vv = dot(&v, &v);
    let rows = (1..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let delta = if i == j { 1.0 } else { 0.0 };
                    delta - 2.0 * v[i] * v[j] / vv
                })
                .collect()
        })
        .collect();
    Ok(Projection { rows })
}

/// The switching problem after projection onto the complement of `u₁`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProjectionReduction {
    pub projection: Projection,
    /// `θ ‖Q u₂‖² = θ (1 - (u₁ᵀu₂)²)`.
    pub theta_tilde: f64,
    /// `Q u₂ / ‖Q u₂‖`; `None` when `θ̃` is below [`UNDETECTABLE_THETA`].
    pub u_reduced: Option<Vec<f64>>,
}

impl ProjectionReduction {
    pub fn detectable(&self) -> bool {
        self.u_reduced.is_some()
    }

    /// Emerging-subspace model in `R^{k-1}`, if the change survives.
    pub fn reduced_model(&self, sigma2: f64) -> Result<Option<SpikedModel>> {
        match &self.u_reduced {
            Some(u) => Ok(Some(SpikedModel::new(sigma2, self.theta_tilde, u.clone())?)),
            None => Ok(None),
        }
    }
}

/// Projection, effective signal and reduced direction for `u₁ → u₂`.
pub fn reduction_for(theta: f64, u1: &[f64], u2: &[f64]) -> Result<ProjectionReduction> {
    check_dim(u1.len(), u2.len())?;
    let projection = build_projection(u1)?;
    let mut qu2 = projection.apply(u2)?;
    let len2 = dot(&qu2, &qu2);
    let theta_tilde = theta * len2;
    let u_reduced = if theta_tilde < UNDETECTABLE_THETA {
        None
    } else {
        let len = len2.sqrt();
        qu2.iter_mut().for_each(|v| *v /= len);
        Some(qu2)
    };
    Ok(ProjectionReduction {
        projection,
        theta_tilde,
        u_reduced,
    })
}

/// Projects a switching stream: returns `y_t = Q x_t` and the reduction.
pub fn reduce_switching(spec: &SwitchSpec) -> Result<(Vec<Vec<f64>>, ProjectionReduction)> {
    spec.validate()?;
    let red = reduction_for(spec.theta, &spec.u1, &spec.u2)?;
    let ys = spec
        .generate()?
        .iter()
        .map(|x| red.projection.apply(x))
        .collect::<Result<_>>()?;
    Ok((ys, red))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_models() {
        assert!(SpikedModel::new(0.0, 1.0, vec![1.0]).is_err());
        assert!(SpikedModel::new(1.0, -1.0, vec![1.0]).is_err());
        assert!(SpikedModel::new(1.0, 1.0, vec![1.0, 1.0]).is_err());
        assert_eq!(SpikedModel::axis(3, 2.0, 4.0, 1).unwrap().rho(), 2.0);
    }

    #[test]
    fn change_time_semantics() {
        assert!(ChangeTime::At(0).is_post_change(1));
        assert!(!ChangeTime::At(3).is_post_change(3));
        assert!(ChangeTime::At(3).is_post_change(4));
        assert!(!ChangeTime::Never.is_post_change(usize::MAX));
    }

    #[test]
    fn same_seed_same_stream() {
        let spec = StreamSpec {
            model: SpikedModel::axis(3, 1.0, 1.0, 0).unwrap(),
            tau: ChangeTime::At(5),
            n: 20,
            seed: 9,
        };
        assert_eq!(spec.generate().unwrap(), spec.generate().unwrap());
    }

    #[test]
    fn pre_and_post_share_noise() {
        let model = SpikedModel::axis(2, 1.0, 1.0, 0).unwrap();
        let mut a = Sampler::new(&model, ChangeTime::Never, 1);
        let mut b = Sampler::new(&model, ChangeTime::At(0), 1);
        let (xa, xb) = (a.next_vec(), b.next_vec());
        assert_eq!(xa[1], xb[1]);
    }

    #[test]
    fn axis_aligned_projection() {
        let q = build_projection(&[1.0, 0.0, 0.0]).unwrap();
        assert_eq!(q.rows(), &[vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]]);
    }

    #[test]
    fn theta_tilde_examples() {
        let e1 = [1.0, 0.0];
        let r = reduction_for(1.0, &e1, &e1).unwrap();
        assert_eq!(r.theta_tilde, 0.0);
        assert!(!r.detectable());
        let r = reduction_for(1.0, &e1, &[0.0, 1.0]).unwrap();
        assert!((r.theta_tilde - 1.0).abs() < 1e-12);
        let s = 0.5f64.sqrt();
        let r = reduction_for(1.0, &e1, &[s, s]).unwrap();
        assert!((r.theta_tilde - 0.5).abs() < 1e-12);
    }

    #[test]
    fn zero_vector_projection_fails() {
        assert!(build_projection(&[0.0, 0.0]).is_err());
    }
}
