use crate::error::{check_dim, Error, Result};

/// Dense symmetric matrix with full row-major storage.
///
/// Every write goes through [`SymMatrix::set`] or a symmetric update, so the
/// two triangles are always identical bit for bit.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "SymMatrix needs dim >= 1");
        Self {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = 1.0;
        }
        m
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    /// Builds from rows, taking the upper triangle as authoritative.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::invalid("rows", "matrix must have at least one row"));
        }
        let mut m = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            check_dim(dim, row.len())?;
            for (j, &v) in row.iter().enumerate().skip(i) {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    /// `sigma2 * I + theta * u u^T`.
    pub fn spiked(sigma2: f64, theta: f64, u: &[f64]) -> Self {
        let mut m = Self::identity(u.len());
        m.scale(sigma2);
        m.add_outer(u, theta);
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.dim + j] = v;
        self.data[j * self.dim + i] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn scale(&mut self, s: f64) {
        self.data.iter_mut().for_each(|v| *v *= s);
    }

    /// `self += scale * x x^T`.
    #[inline]
    pub fn add_outer(&mut self, x: &[f64], scale: f64) {
        let n = self.dim;
        debug_assert_eq!(x.len(), n);
        for i in 0..n {
            let xi = x[i];
            if xi == 0.0 {
                continue;
            }
            let row = &mut self.data[i * n..(i + 1) * n];
            for (r, &xj) in row.iter_mut().zip(x) {
                // scale * (xi * xj) keeps the update bitwise symmetric.
                *r += scale * (xi * xj);
            }
        }
    }

    /// `self += a a^T - b b^T`, the window update-and-downdate in one pass.
    #[inline]
    pub fn add_sub_outer(&mut self, add: &[f64], sub: &[f64]) {
        let n = self.dim;
        for i in 0..n {
            let (ai, bi) = (add[i], sub[i]);
            let row = &mut self.data[i * n..(i + 1) * n];
            for j in 0..n {
                row[j] += ai * add[j] - bi * sub[j];
            }
        }
    }

    pub fn add_assign(&mut self, other: &SymMatrix) {
        assert_eq!(self.dim, other.dim);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b;
        }
    }

    #[inline]
    pub fn mul_vec_into(&self, v: &[f64], out: &mut [f64]) {
        let n = self.dim;
        for (i, o) in out.iter_mut().enumerate().take(n) {
            *o = dot(&self.data[i * n..(i + 1) * n], v);
        }
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        self.mul_vec_into(v, &mut out);
        out
    }

    /// `v^T M v`.
    pub fn quadratic_form(&self, v: &[f64]) -> f64 {
        (0..self.dim)
            .map(|i| v[i] * dot(self.row(i), v))
            .sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &SymMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Whether `level * I - M` has a Cholesky factorization, i.e. every
    /// eigenvalue of `M` lies strictly below `level`.
    ///
    /// Costs about `k^3 / 6` flops against several hundred matrix-vector
    /// products for a converged power iteration, which is why threshold
    /// tests go through here first.
    pub fn all_eigenvalues_below(&self, level: f64) -> bool {
        let n = self.dim;
        // Lower-triangular factor of (level I - M), packed row-major.
        let mut l = [0.0f64; 16 * 16];
        let mut heap;
        let l: &mut [f64] = if n <= 16 {
            &mut l[..n * n]
        } else {
            heap = vec![0.0; n * n];
            &mut heap
        };
        for i in 0..n {
            for j in 0..=i {
                let mut s = if i == j { level } else { 0.0 } - self.get(i, j);
                for p in 0..j {
                    s -= l[i * n + p] * l[j * n + p];
                }
                if i == j {
                    if s <= 0.0 || !s.is_finite() {
                        return false;
                    }
                    l[i * n + i] = s.sqrt();
                } else {
                    l[i * n + j] = s / l[j * n + j];
                }
            }
        }
        true
    }
}

#[inline]
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Scales `v` to unit norm in place and returns the original norm.
pub fn normalize(v: &mut [f64]) -> f64 {
    let n = norm(v);
    if n > 0.0 {
        v.iter_mut().for_each(|x| *x /= n);
    }
    n
}

/// Flips `v` so its largest-magnitude component is nonnegative.
pub fn canonical_sign(v: &mut [f64]) {
    let mut best = 0.0f64;
    let mut sign = 1.0;
    for &x in v.iter() {
        if x.abs() > best {
            best = x.abs();
            sign = if x < 0.0 { -1.0 } else { 1.0 };
        }
    }
    if sign < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_mirrors() {
        let mut m = SymMatrix::zeros(3);
        m.set(0, 2, 4.0);
        assert_eq!(m.get(2, 0), 4.0);
    }

    #[test]
    fn from_rows_uses_upper_triangle() {
        let m = SymMatrix::from_rows(&[vec![1.0, 2.0], vec![99.0, 3.0]]).unwrap();
        assert_eq!(m.get(1, 0), 2.0);
    }

    #[test]
    fn spiked_eigen_structure() {
        let u = [0.0, 1.0, 0.0];
        let m = SymMatrix::spiked(1.0, 2.0, &u);
        assert_eq!(m.mul_vec(&u), vec![0.0, 3.0, 0.0]);
    }

    #[test]
    fn cholesky_exceedance() {
        let m = SymMatrix::diagonal(&[3.0, 1.0]);
        assert!(m.all_eigenvalues_below(3.0 + 1e-9));
        assert!(!m.all_eigenvalues_below(3.0));
        assert!(!m.all_eigenvalues_below(2.5));
    }

    #[test]
    fn sign_convention() {
        let mut v = vec![0.1, -0.9, 0.3];
        canonical_sign(&mut v);
        assert_eq!(v, vec![-0.1, 0.9, -0.3]);
    }
}
