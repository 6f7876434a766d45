//! Run-length and delay approximations for the largest-eigenvalue rule,
//! built on the Tracy–Widom law of order one.

mod approx;
mod tw;
#[allow(clippy::excessive_precision)]
mod tw1_table;

pub use approx::{
    arl_prop2, beta_coefficient, edd_lower_bound, normal_cdf, normal_pdf, nu,
    standardized_threshold, threshold_prop1, threshold_prop2, Prop1Threshold,
};
pub use tw::{
    tw1_cdf, tw1_sf, tw1_table_moments, tw_center_scale, tw_quantile, TwConstants,
    QUANTILE_SUPPORT, TW1_MEAN, TW1_SD,
};
