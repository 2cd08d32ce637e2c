//! Measurement layer for the experiments: PageRank bucketing, Welch's t-test,
//! spectral bipartition, top-k ranking and cut-edge counting.

mod buckets;
mod components;
mod ranking;
mod spectral;
mod stats;

pub use buckets::{bucketize, BucketAssignment, BUCKET_COUNT};
pub use components::largest_component;
pub use ranking::{compare_inits, cut_edges_topk, rank_top_k, InitComparison};
pub use spectral::{spectral_bipartition, Bipartition, SpectralConfig};
pub use stats::{
    mean, regularized_incomplete_beta, student_t_two_sided_p, variance, welch_t_test, TTestResult,
    P_VALUE_FLOOR,
};

use crate::centrality::NeighborPolarity;

/// Default two-sided significance level.
pub const DEFAULT_ALPHA: f64 = 0.05;

/// Red-fraction band in which a neighbourhood counts as balanced.
pub const BALANCED_NEIGHBORHOOD: (f64, f64) = (0.45, 0.55);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NeighborhoodClass {
    /// `R/(R+B)` above the balanced band.
    Red,
    Balanced,
    /// `R/(R+B)` below the balanced band.
    Blue,
    Isolated,
}

pub fn classify_neighborhood(polarity: &NeighborPolarity, node: usize) -> NeighborhoodClass {
    let (lo, hi) = BALANCED_NEIGHBORHOOD;
    match polarity.red_fraction(node) {
        None => NeighborhoodClass::Isolated,
        Some(f) if f > hi => NeighborhoodClass::Red,
        Some(f) if f < lo => NeighborhoodClass::Blue,
        Some(_) => NeighborhoodClass::Balanced,
    }
}
