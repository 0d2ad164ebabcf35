//! Spacing statistics of `Ω_q` and the k-level correlation `R_k(X, q)`.

mod correlation;
mod distribution;
mod spacing;

pub use correlation::{
    correlation_on, r_k_correlation, CorrelationReport, CorrelationWindow, DEFAULT_LATTICE_CAP,
};
pub use distribution::{ks_exponential, ks_exponential_sample, Histogram, HistogramRow, KsResult};
pub use spacing::{
    adjacent_correlation, gap_frequency, joint_consecutive, lag_correlation, spacings,
    JointSpacings, SpacingSeries,
};

use thiserror::Error;

use crate::composite::CompositeError;

pub const DEFAULT_BINS: usize = 50;
pub const DEFAULT_HIST_MAX: f64 = 6.0;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StatsError {
    #[error(transparent)]
    Composite(#[from] CompositeError),
    #[error("degenerate: mean spacing 1")]
    Degenerate,
    #[error("need at least {need} points, have {have}")]
    TooFewPoints { have: u64, need: u64 },
    #[error("window has more than {cap} lattice points")]
    LatticeCap { cap: u64 },
    #[error("{0}")]
    Window(String),
}
