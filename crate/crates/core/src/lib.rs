//! Score-based subsampled linear regression.
//!
//! Estimate a linear model from a small number of sampled responses: draw m
//! row indices with replacement from a sampling-score distribution, zero-fill
//! and reweight the observed responses, and project through the full design's
//! pseudo-inverse. The estimator admits a closed-form mean-square error for
//! any score vector, which this crate implements together with the optimal
//! and practical score families, two independent verification oracles
//! (exhaustive enumeration and Monte Carlo), and a synthetic-experiment
//! harness with CSV/SVG output.

pub mod error;
pub mod linalg;

pub use error::{Error, Result};
pub use linalg::{build_design, leverage_profile, pseudo_inverse};
pub use linalg::{DesignMatrix, LeverageProfile, PseudoInverse};
