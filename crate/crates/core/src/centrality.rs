//! PageRank, Diverse Centrality and the polarity-reweighting baselines.
//!
//! Diverse Centrality is the fixed point of
//!
//! ```text
//! t_i  = f( (1-p) q_i / n + p * sum_{j -> i} (s_j / d_j) q_j )
//! s'_i = t_i / sum_j t_j
//! ```
//!
//! where `q_i` is node `i`'s affiliation vector and `f` a concave aggregator
//! over communities. It is computed by iterating the map from an initial score
//! vector until successive iterates are within `epsilon` in L1.

use rand::distributions::Open01;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{l1_distance, AffiliationMatrix, Graph, ScoreVector};
use crate::rng;
use crate::sum::compensated_sum;
use crate::{Error, Result};

/// Above this many nodes the per-node update runs on the rayon pool.
const PARALLEL_THRESHOLD: usize = 4096;

/// Concave aggregator applied to each node's per-community mass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Aggregator {
    Minimum,
    GeometricMean,
    /// Sum of components. Turns the solver into plain PageRank.
    L1,
}

impl Aggregator {
    pub fn apply(self, x: &[f64]) -> f64 {
        match self {
            Aggregator::Minimum => x.iter().copied().fold(f64::INFINITY, f64::min),
            Aggregator::GeometricMean => {
                let product: f64 = x.iter().product();
                match x.len() {
                    1 => product,
                    2 => product.sqrt(),
                    k => product.powf(1.0 / k as f64),
                }
            }
            Aggregator::L1 => x.iter().sum(),
        }
    }
}

/// Applies `f` to a vector of nonnegative per-community values.
pub fn apply_f(f: Aggregator, x: &[f64]) -> f64 {
    f.apply(x)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Init {
    Uniform,
    /// I.i.d. uniform draws on (0,1), L1-normalised.
    Random { seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub damping: f64,
    pub epsilon: f64,
    pub aggregator: Aggregator,
    pub max_iters: usize,
    pub init: Init,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            damping: 0.85,
            epsilon: 1e-10,
            aggregator: Aggregator::Minimum,
            max_iters: 10_000,
            init: Init::Uniform,
        }
    }
}

impl SolverConfig {
    pub fn with_init(self, init: Init) -> Self {
        Self { init, ..self }
    }

    pub fn with_aggregator(self, aggregator: Aggregator) -> Self {
        Self { aggregator, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.damping > 0.0 && self.damping < 1.0) {
            return Err(Error::BadParams(format!(
                "damping must lie in (0,1), got {}",
                self.damping
            )));
        }
        if !(self.epsilon > 0.0) {
            return Err(Error::BadParams(format!(
                "epsilon must be positive, got {}",
                self.epsilon
            )));
        }
        if self.max_iters == 0 {
            return Err(Error::BadParams("max_iters must be at least 1".into()));
        }
        Ok(())
    }

    fn initial_scores(&self, n: usize) -> Vec<f64> {
        match self.init {
            Init::Uniform => vec![1.0 / n as f64; n],
            Init::Random { seed } => {
                let mut rng = rng::stream(seed, rng::INIT_STREAM);
                let raw: Vec<f64> = (0..n).map(|_| rng.sample(Open01)).collect();
                let total = compensated_sum(raw.iter().copied());
                raw.into_iter().map(|x| x / total).collect()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverReport {
    pub iterations: usize,
    pub converged: bool,
    pub final_l1_delta: f64,
    /// L1 distance between successive iterates, one entry per iteration.
    pub per_iteration_delta: Vec<f64>,
}

fn check_sinks(g: &Graph) -> Result<()> {
    match g.sinks().next() {
        Some(node) => Err(Error::SinkPresent(node)),
        None => Ok(()),
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, found })
    }
}

/// Iterates `step` (which fills an unnormalised next iterate from the current
/// one) with L1 normalisation until the L1 change drops to `epsilon`.
fn iterate<F>(n: usize, cfg: &SolverConfig, mut step: F) -> Result<(ScoreVector, SolverReport)>
where
    F: FnMut(&[f64], &mut [f64]),
{
    cfg.validate()?;
    let mut current = cfg.initial_scores(n);
    let mut next = vec![0.0; n];
    let mut trace = Vec::new();
    for iteration in 1..=cfg.max_iters {
        step(&current, &mut next);
        let total = compensated_sum(next.iter().copied());
        if !(total > 0.0) || !total.is_finite() {
            return Err(Error::DegenerateMass);
        }
        next.iter_mut().for_each(|x| *x /= total);
        let delta = l1_distance(&next, &current);
        trace.push(delta);
        std::mem::swap(&mut current, &mut next);
        if delta <= cfg.epsilon {
            let report = SolverReport {
                iterations: iteration,
                converged: true,
                final_l1_delta: delta,
                per_iteration_delta: trace,
            };
            return Ok((ScoreVector::from_normalized_unchecked(current), report));
        }
    }
    Err(Error::NonConvergence {
        iterations: cfg.max_iters,
        last_delta: trace.last().copied().unwrap_or(f64::NAN),
    })
}

fn for_each_node<F>(out: &mut [f64], f: F)
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    if out.len() >= PARALLEL_THRESHOLD {
        out.par_iter_mut().enumerate().for_each(|(i, x)| *x = f(i));
    } else {
        out.iter_mut().enumerate().for_each(|(i, x)| *x = f(i));
    }
}

/// Damped PageRank by power iteration. The graph must have no sinks.
pub fn pagerank(g: &Graph, cfg: &SolverConfig) -> Result<(ScoreVector, SolverReport)> {
    check_sinks(g)?;
    let n = g.node_count();
    let p = cfg.damping;
    let restart = (1.0 - p) / n as f64;
    let inv_degree: Vec<f64> = g.out_degrees().iter().map(|&d| 1.0 / d as f64).collect();
    let mut share = vec![0.0; n];
    iterate(n, cfg, |s, next| {
        for (w, (&sj, &inv)) in share.iter_mut().zip(s.iter().zip(&inv_degree)) {
            *w = sj * inv;
        }
        let share = &share;
        for_each_node(next, |i| {
            let inflow: f64 = g.in_neighbors(i).iter().map(|&j| share[j]).sum();
            restart + p * inflow
        });
    })
}

/// Diverse Centrality by iterated best response.
pub fn diverse_centrality(
    g: &Graph,
    a: &AffiliationMatrix,
    cfg: &SolverConfig,
) -> Result<(ScoreVector, SolverReport)> {
    check_sinks(g)?;
    let n = g.node_count();
    check_len(n, a.node_count())?;
    let k = a.k();
    let p = cfg.damping;
    let restart = (1.0 - p) / n as f64;
    let f = cfg.aggregator;
    let inv_degree: Vec<f64> = g.out_degrees().iter().map(|&d| 1.0 / d as f64).collect();
    let mut share = vec![0.0; n];
    iterate(n, cfg, |s, next| {
        for (w, (&sj, &inv)) in share.iter_mut().zip(s.iter().zip(&inv_degree)) {
            *w = sj * inv;
        }
        let share = &share;
        for_each_node(next, |i| {
            let mut mass = [0.0_f64; 8];
            let mut heap;
            let mass: &mut [f64] = if k <= mass.len() {
                &mut mass[..k]
            } else {
                heap = vec![0.0; k];
                &mut heap
            };
            for &j in g.in_neighbors(i) {
                for (m, &qj) in mass.iter_mut().zip(a.row(j)) {
                    *m += share[j] * qj;
                }
            }
            for (m, &qi) in mass.iter_mut().zip(a.row(i)) {
                *m = restart * qi + p * *m;
            }
            f.apply(mass)
        });
    })
}

/// Red and blue neighbourhood mass per node.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborPolarity {
    pub red: Vec<f64>,
    pub blue: Vec<f64>,
}

impl NeighborPolarity {
    /// `R / (R + B)`, or `None` for a node without non-self neighbours.
    pub fn red_fraction(&self, node: usize) -> Option<f64> {
        let total = self.red[node] + self.blue[node];
        (total > 0.0).then(|| self.red[node] / total)
    }

    /// `min(R, B) / (R + B)`, zero for isolated nodes.
    pub fn balance(&self, node: usize) -> f64 {
        self.red_fraction(node).map_or(0.0, |f| f.min(1.0 - f))
    }
}

/// Sums affiliation over in-neighbours and out-neighbours separately, skipping
/// self-loops. A mutual neighbour is counted once per direction.
pub fn neighbor_polarity(g: &Graph, a: &AffiliationMatrix) -> Result<NeighborPolarity> {
    a.require_two()?;
    let n = g.node_count();
    check_len(n, a.node_count())?;
    let mut red = vec![0.0; n];
    let mut blue = vec![0.0; n];
    for i in 0..n {
        for &j in g.in_neighbors(i).iter().chain(g.out_neighbors(i)) {
            if j != i {
                red[i] += a.red(j);
                blue[i] += a.blue(j);
            }
        }
    }
    Ok(NeighborPolarity { red, blue })
}

/// Scores proportional to `s_i * min(r_i, b_i)`.
pub fn reweight_node_bias(s: &ScoreVector, a: &AffiliationMatrix) -> Result<ScoreVector> {
    a.require_two()?;
    check_len(s.len(), a.node_count())?;
    let weights = (0..s.len())
        .map(|i| s[i] * a.red(i).min(a.blue(i)))
        .collect();
    ScoreVector::from_weights(weights)
}

/// Scores proportional to `s_i * min(R_i, B_i) / (R_i + B_i)`.
pub fn reweight_neighbor_bias(
    s: &ScoreVector,
    g: &Graph,
    a: &AffiliationMatrix,
) -> Result<ScoreVector> {
    let polarity = neighbor_polarity(g, a)?;
    check_len(s.len(), g.node_count())?;
    let weights = (0..s.len()).map(|i| s[i] * polarity.balance(i)).collect();
    ScoreVector::from_weights(weights)
}
