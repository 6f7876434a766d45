//! Leading eigenpair extraction for small dense symmetric matrices.
//!
//! Power iteration is the workhorse: in a sliding window consecutive
//! matrices differ by a rank-two term, so the previous leading eigenvector is
//! a good starting point. Cyclic Jacobi is the dense fallback when the power
//! iteration budget runs out (near-degenerate top of the spectrum).

use super::sym::{canonical_sign, dot, norm, normalize, SymMatrix};
use crate::error::{Error, Result};

/// Largest eigenvalue and a unit-norm eigenvector for it.
#[derive(Debug, Clone, PartialEq)]
pub struct EigPair {
    pub value: f64,
    pub vector: Vec<f64>,
}

/// Power iteration settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerIteration {
    /// Relative residual tolerance: converged when `|Mv - λv| <= tol * max(1, |λ|)`.
    pub tol: f64,
    pub max_iter: usize,
}

impl PowerIteration {
    /// `tol = 1e-10 * k`, `max_iter = 1000`.
    pub fn for_dim(k: usize) -> Self {
        Self {
            tol: 1e-10 * k as f64,
            max_iter: 1000,
        }
    }

    pub fn with_max_iter(mut self, max_iter: usize) -> Self {
        self.max_iter = max_iter;
        self
    }
}

/// Leading eigenpair of `m` by power iteration.
///
/// Convergence is judged on the eigen-equation residual only, never on the
/// change between iterates, so with a (near-)degenerate top eigenvalue the
/// returned vector is whichever member of the eigenspace the iteration
/// settled on. The sign is fixed so the largest-magnitude component is
/// nonnegative.
///
/// If the dominant-magnitude eigenvalue turns out negative the matrix is
/// shifted by it and the iteration rerun, so indefinite input still yields
/// the largest (not the largest in magnitude) eigenvalue.
pub fn leading_eigpair(
    m: &SymMatrix,
    warm: Option<&[f64]>,
    tol: f64,
    max_iter: usize,
) -> Result<EigPair> {
    if !(tol > 0.0) {
        return Err(Error::invalid("tol", "must be positive"));
    }
    if max_iter == 0 {
        return Err(Error::invalid("max_iter", "must be at least 1"));
    }
    if let Some(w) = warm {
        crate::error::check_dim(m.dim(), w.len())?;
    }
    let pair = power_shifted(m, 0.0, warm, tol, max_iter)?;
    let pair = if pair.value >= 0.0 {
        pair
    } else {
        // Dominant eigenvalue is negative: shift so the spectrum is nonnegative.
        power_shifted(m, -pair.value, warm, tol, max_iter)?
    };
    if is_leading(m, &pair, tol) {
        return Ok(pair);
    }
    // A start vector with no component along the top eigenvector converges
    // to another eigenpair. Retry once from the generic start.
    if warm.is_some() {
        let retry = power_shifted(m, 0.0, None, tol, max_iter)?;
        let retry = if retry.value >= 0.0 {
            retry
        } else {
            power_shifted(m, -retry.value, None, tol, max_iter)?
        };
        if is_leading(m, &retry, tol) {
            return Ok(retry);
        }
    }
    Err(Error::NoConvergence {
        iterations: max_iter,
        residual: f64::NAN,
        best: pair,
    })
}

/// Whether no eigenvalue of `m` exceeds `pair.value` beyond the residual
/// tolerance, checked by a Cholesky factorization.
fn is_leading(m: &SymMatrix, pair: &EigPair, tol: f64) -> bool {
    let scale = pair.value.abs().max(1.0);
    m.all_eigenvalues_below(pair.value + 2.0 * tol * scale + 1e-13 * scale)
}

fn default_start(k: usize) -> Vec<f64> {
    // Generic direction; a constant vector is orthogonal to too many
    // structured eigenvectors.
    let mut v: Vec<f64> = (0..k).map(|i| 1.0 / (i as f64 + 1.5).sqrt()).collect();
    normalize(&mut v);
    v
}

fn power_shifted(
    m: &SymMatrix,
    shift: f64,
    warm: Option<&[f64]>,
    tol: f64,
    max_iter: usize,
) -> Result<EigPair> {
    let k = m.dim();
    let mut v = match warm {
        Some(w) if norm(w) > 0.0 => {
            let mut v = w.to_vec();
            normalize(&mut v);
            v
        }
        _ => default_start(k),
    };
    let mut y = vec![0.0; k];
    let mut lambda = 0.0;
    let mut residual = f64::INFINITY;

    for _ in 0..max_iter {
        m.mul_vec_into(&v, &mut y);
        lambda = dot(&v, &y);
        residual = y
            .iter()
            .zip(&v)
            .map(|(yi, vi)| (yi - lambda * vi).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual <= tol * lambda.abs().max(1.0) {
            canonical_sign(&mut v);
            return Ok(EigPair { value: lambda, vector: v });
        }
        for (yi, vi) in y.iter_mut().zip(&v) {
            *yi += shift * vi;
        }
        let n = normalize(&mut y);
        if n == 0.0 {
            break;
        }
        std::mem::swap(&mut v, &mut y);
    }
    canonical_sign(&mut v);
    Err(Error::NoConvergence {
        iterations: max_iter,
        residual,
        best: EigPair { value: lambda, vector: v },
    })
}

/// Full eigendecomposition by cyclic Jacobi rotations.
///
/// Returns eigenvalues in descending order with matching unit eigenvectors
/// (sign-normalized). Adequate up to k of about a hundred.
pub fn jacobi_eigen(m: &SymMatrix) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = m.dim();
    let mut a: Vec<f64> = m.as_slice().to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let scale = m.frobenius_norm().max(f64::MIN_POSITIVE);

    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j].powi(2))
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for r in 0..n {
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    a[r * n + p] = c * arp - s * arq;
                    a[r * n + q] = s * arp + c * arq;
                }
                for r in 0..n {
                    let apr = a[p * n + r];
                    let aqr = a[q * n + r];
                    a[p * n + r] = c * apr - s * aqr;
                    a[q * n + r] = s * apr + c * aqr;
                }
                for r in 0..n {
                    let vrp = v[r * n + p];
                    let vrq = v[r * n + q];
                    v[r * n + p] = c * vrp - s * vrq;
                    v[r * n + q] = s * vrp + c * vrq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = order
        .iter()
        .map(|&c| {
            let mut col: Vec<f64> = (0..n).map(|r| v[r * n + c]).collect();
            normalize(&mut col);
            canonical_sign(&mut col);
            col
        })
        .collect();
    (values, vectors)
}

/// Leading pair from the dense solver.
pub fn jacobi_leading(m: &SymMatrix) -> EigPair {
    let (values, mut vectors) = jacobi_eigen(m);
    EigPair {
        value: values[0],
        vector: vectors.swap_remove(0),
    }
}

/// Power iteration with a dense-solver fallback; never fails.
pub fn leading_eigpair_or_dense(m: &SymMatrix, warm: Option<&[f64]>, cfg: PowerIteration) -> EigPair {
    match leading_eigpair(m, warm, cfg.tol, cfg.max_iter) {
        Ok(pair) => pair,
        Err(_) => jacobi_leading(m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn diagonal_matrix() {
        let m = SymMatrix::diagonal(&[3.0, 1.0]);
        let p = leading_eigpair(&m, None, 1e-12, 1000).unwrap();
        assert!(close(p.value, 3.0, 1e-10));
        assert!(close(p.vector[0], 1.0, 1e-6) && close(p.vector[1], 0.0, 1e-6));
    }

    #[test]
    fn analytic_spike() {
        let m = SymMatrix::spiked(1.0, 2.0, &[0.0, 1.0, 0.0]);
        let p = leading_eigpair(&m, None, 1e-12, 1000).unwrap();
        assert!(close(p.value, 3.0, 1e-10));
        assert!(close(p.vector[1], 1.0, 1e-6));
    }

    #[test]
    fn identity_is_degenerate_but_converges() {
        let m = SymMatrix::identity(4);
        let p = leading_eigpair(&m, None, 1e-10, 5).unwrap();
        assert!(close(p.value, 1.0, 1e-12));
        assert!(close(norm(&p.vector), 1.0, 1e-12));
    }

    #[test]
    fn negative_dominant_eigenvalue_is_shifted_away() {
        let m = SymMatrix::diagonal(&[1.0, -3.0]);
        let p = leading_eigpair(&m, None, 1e-12, 1000).unwrap();
        assert!(close(p.value, 1.0, 1e-9));
    }

    #[test]
    fn zero_matrix() {
        let p = leading_eigpair(&SymMatrix::zeros(3), None, 1e-10, 10).unwrap();
        assert_eq!(p.value, 0.0);
    }

    #[test]
    fn budget_exhaustion_carries_best_iterate() {
        let m = SymMatrix::diagonal(&[1.0, 0.999_999, 0.5]);
        match leading_eigpair(&m, None, 1e-14, 3) {
            Err(Error::NoConvergence { best, iterations, .. }) => {
                assert_eq!(iterations, 3);
                assert!(close(norm(&best.vector), 1.0, 1e-12));
            }
            other => panic!("expected NoConvergence, got {other:?}"),
        }
    }

    #[test]
    fn invalid_arguments() {
        let m = SymMatrix::identity(2);
        assert!(leading_eigpair(&m, None, 0.0, 10).is_err());
        assert!(leading_eigpair(&m, None, 1e-10, 0).is_err());
        assert!(leading_eigpair(&m, Some(&[1.0]), 1e-10, 10).is_err());
    }

    #[test]
    fn warm_start_on_a_lower_eigenvector_is_caught() {
        let m = SymMatrix::diagonal(&[0.0, 9.0]);
        let p = leading_eigpair(&m, Some(&[1.0, 0.0]), 1e-12, 1000).unwrap();
        assert!(close(p.value, 9.0, 1e-9));
    }

    #[test]
    fn jacobi_sorted_descending() {
        let m = SymMatrix::from_rows(&[
            vec![2.0, 1.0, 0.0],
            vec![1.0, 2.0, 0.0],
            vec![0.0, 0.0, 5.0],
        ])
        .unwrap();
        let (vals, vecs) = jacobi_eigen(&m);
        assert!(close(vals[0], 5.0, 1e-12));
        assert!(close(vals[1], 3.0, 1e-12));
        assert!(close(vals[2], 1.0, 1e-12));
        for (val, vec) in vals.iter().zip(&vecs) {
            let mv = m.mul_vec(vec);
            for (a, b) in mv.iter().zip(vec) {
                assert!(close(*a, val * b, 1e-12));
            }
        }
    }
}
