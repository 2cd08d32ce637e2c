//! Diverse Centrality and related centrality measures on directed graphs whose
//! nodes carry fractional community affiliations.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: the immutable [`Graph`], [`AffiliationMatrix`] and [`ScoreVector`]
//!   types together with sink patching and symmetrisation.
//! - [`io`]: edge-list and affiliation text formats.
//! - [`centrality`]: PageRank, the Diverse Centrality fixed-point solver and the
//!   two reweighting baselines.
//! - [`betweenness`]: Brandes betweenness and its pair-weighted diverse variant.
//! - [`generators`]: seeded random graph models used by the experiments.
//! - [`analysis`]: bucketing, Welch's t-test, spectral bipartition and cut
//!   counting.

pub mod analysis;
pub mod betweenness;
pub mod centrality;
mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod rng;
mod sum;

pub use error::{Error, Result};
pub use graph::{AffiliationMatrix, Graph, ScoreVector};
