//! Small dense symmetric linear algebra: the sliding-window covariance and
//! its leading eigenpair.

mod eigen;
mod sym;
mod window;

pub use eigen::{
    jacobi_eigen, jacobi_leading, leading_eigpair, leading_eigpair_or_dense, EigPair,
    PowerIteration,
};
pub use sym::{canonical_sign, dot, norm, normalize, SymMatrix};
pub use window::WindowCovariance;
