use super::eigen::{leading_eigpair_or_dense, EigPair, PowerIteration};
use super::sym::SymMatrix;
use crate::error::{check_dim, Error, Result};

/// Un-normalized sliding-window sample covariance.
///
/// Holds the sum of outer products of the last `min(pushed, window)`
/// observations. While fewer than `window` vectors have arrived the sum
/// simply grows; afterwards each push adds the newest outer product and
/// removes the oldest one. The matrix is rebuilt from the buffer every
/// `rebuild_every` pushes to keep downdate round-off from accumulating.
#[derive(Debug, Clone)]
pub struct WindowCovariance {
    dim: usize,
    window: usize,
    // Ring of `window` vectors, flattened; `head` is the slot of the oldest.
    buffer: Vec<f64>,
    head: usize,
    count: usize,
    matrix: SymMatrix,
    since_rebuild: usize,
    rebuild_every: usize,
    eig_cache: Option<EigPair>,
    eig_fresh: bool,
    evicted: Vec<f64>,
}

impl WindowCovariance {
    /// Window of length `window` over `dim`-dimensional observations, with
    /// the default rebuild period of `10 * window` pushes.
    pub fn new(dim: usize, window: usize) -> Result<Self> {
        Self::with_rebuild_period(dim, window, 10 * window)
    }

    pub fn with_rebuild_period(dim: usize, window: usize, rebuild_every: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("dim", "must be at least 1"));
        }
        if window == 0 {
            return Err(Error::invalid("window", "must be at least 1"));
        }
        if rebuild_every == 0 {
            return Err(Error::invalid("rebuild_every", "must be at least 1"));
        }
        Ok(Self {
            dim,
            window,
            buffer: vec![0.0; dim * window],
            head: 0,
            count: 0,
            matrix: SymMatrix::zeros(dim),
            since_rebuild: 0,
            rebuild_every,
            eig_cache: None,
            eig_fresh: false,
            evicted: vec![0.0; dim],
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn window(&self) -> usize {
        self.window
    }

    /// Number of buffered observations, `min(pushed, window)`.
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn is_full(&self) -> bool {
        self.count == self.window
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.matrix
    }

    /// Adds `x`; once the window is full the oldest observation is removed
    /// and returned.
    pub fn push(&mut self, x: &[f64]) -> Result<Option<&[f64]>> {
        check_dim(self.dim, x.len())?;
        let k = self.dim;
        let evicted = if self.count == self.window {
            let slot = self.head;
            let old = &mut self.buffer[slot * k..(slot + 1) * k];
            self.evicted.copy_from_slice(old);
            old.copy_from_slice(x);
            self.head = (self.head + 1) % self.window;
            self.matrix.add_sub_outer(x, &self.evicted);
            true
        } else {
            let slot = (self.head + self.count) % self.window;
            self.buffer[slot * k..(slot + 1) * k].copy_from_slice(x);
            self.count += 1;
            self.matrix.add_outer(x, 1.0);
            false
        };
        self.eig_fresh = false;
        self.since_rebuild += 1;
        if self.since_rebuild >= self.rebuild_every {
            self.matrix = self.recompute();
            self.since_rebuild = 0;
        }
        Ok(if evicted { Some(&self.evicted) } else { None })
    }

    /// Buffered observations from oldest to newest.
    pub fn iter(&self) -> impl Iterator<Item = &[f64]> + '_ {
        let k = self.dim;
        (0..self.count).map(move |i| {
            let slot = (self.head + i) % self.window;
            &self.buffer[slot * k..(slot + 1) * k]
        })
    }

    /// The window matrix summed from scratch.
    pub fn recompute(&self) -> SymMatrix {
        let mut m = SymMatrix::zeros(self.dim);
        for x in self.iter() {
            m.add_outer(x, 1.0);
        }
        m
    }

    /// Leading eigenpair of the current window matrix, warm-started from the
    /// previous call's eigenvector. Falls back to the dense solver when the
    /// power iteration budget is exhausted.
    pub fn leading_eigpair(&mut self, cfg: PowerIteration) -> &EigPair {
        if !self.eig_fresh || self.eig_cache.is_none() {
            let warm = self.eig_cache.as_ref().map(|p| p.vector.as_slice());
            let pair = leading_eigpair_or_dense(&self.matrix, warm, cfg);
            self.eig_cache = Some(pair);
            self.eig_fresh = true;
        }
        self.eig_cache.as_ref().expect("cache filled above")
    }

    /// Whether the largest eigenvalue of the window matrix is at least
    /// `level`, without computing it.
    pub fn largest_eigenvalue_reaches(&self, level: f64) -> bool {
        !self.matrix.all_eigenvalues_below(level)
    }

    pub fn clear(&mut self) {
        self.head = 0;
        self.count = 0;
        self.matrix = SymMatrix::zeros(self.dim);
        self.since_rebuild = 0;
        self.eig_cache = None;
        self.eig_fresh = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthonormal_pushes_give_identity() {
        let mut wc = WindowCovariance::new(2, 2).unwrap();
        wc.push(&[1.0, 0.0]).unwrap();
        wc.push(&[0.0, 1.0]).unwrap();
        assert_eq!(wc.matrix(), &SymMatrix::identity(2));
        assert_eq!(wc.count(), 2);
    }

    #[test]
    fn eviction_arithmetic() {
        let mut wc = WindowCovariance::new(2, 2).unwrap();
        wc.push(&[1.0, 0.0]).unwrap();
        wc.push(&[0.0, 1.0]).unwrap();
        let evicted = wc.push(&[1.0, 1.0]).unwrap().map(<[f64]>::to_vec);
        assert_eq!(evicted, Some(vec![1.0, 0.0]));
        assert_eq!(wc.matrix().to_rows(), vec![vec![1.0, 1.0], vec![1.0, 2.0]]);
        assert_eq!(wc.count(), 2);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let mut wc = WindowCovariance::new(3, 4).unwrap();
        assert!(matches!(
            wc.push(&[1.0, 2.0]),
            Err(Error::DimensionMismatch { expected: 3, actual: 2 })
        ));
    }

    #[test]
    fn iter_is_oldest_first() {
        let mut wc = WindowCovariance::new(1, 3).unwrap();
        for v in 1..=5 {
            wc.push(&[v as f64]).unwrap();
        }
        let seen: Vec<f64> = wc.iter().map(|x| x[0]).collect();
        assert_eq!(seen, vec![3.0, 4.0, 5.0]);
    }

    #[test]
    fn periodic_rebuild_matches_scratch() {
        let mut wc = WindowCovariance::with_rebuild_period(2, 3, 4).unwrap();
        for i in 0..11 {
            let x = [i as f64 * 0.37, 1.0 - i as f64 * 0.11];
            wc.push(&x).unwrap();
        }
        assert!(wc.matrix().max_abs_diff(&wc.recompute()) < 1e-12);
    }

    #[test]
    fn eigen_cache_is_invalidated_by_push() {
        let cfg = PowerIteration::for_dim(2);
        let mut wc = WindowCovariance::new(2, 1).unwrap();
        wc.push(&[2.0, 0.0]).unwrap();
        assert!((wc.leading_eigpair(cfg).value - 4.0).abs() < 1e-9);
        wc.push(&[0.0, 3.0]).unwrap();
        assert!((wc.leading_eigpair(cfg).value - 9.0).abs() < 1e-9);
    }
}
