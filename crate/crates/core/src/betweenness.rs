//! Betweenness centrality by Brandes' dependency accumulation.
//!
//! Both measures sum over ordered pairs `(s, t)` with `s != t`, excluding the
//! endpoints. The diverse variant weighs every pair by `|r_s - r_t|`; this is
//! injected as the seed of the back-propagation at each target so the cost
//! stays `O(nm)`.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::graph::{AffiliationMatrix, Graph};
use crate::{Error, Result};

/// Sources per rayon task. Fixed so the floating-point merge order never
/// depends on scheduling.
const SOURCES_PER_TASK: usize = 32;

/// Unnormalised per-node betweenness.
#[derive(Debug, Clone, PartialEq)]
pub struct BetweennessScores(pub Vec<f64>);

impl BetweennessScores {
    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

/// Per-source scratch reused across BFS passes.
struct Workspace {
    sigma: Vec<f64>,
    dist: Vec<usize>,
    delta: Vec<f64>,
    preds: Vec<Vec<usize>>,
    order: Vec<usize>,
    queue: VecDeque<usize>,
}

impl Workspace {
    fn new(n: usize) -> Self {
        Self {
            sigma: vec![0.0; n],
            dist: vec![usize::MAX; n],
            delta: vec![0.0; n],
            preds: vec![Vec::new(); n],
            order: Vec::with_capacity(n),
            queue: VecDeque::with_capacity(n),
        }
    }

    /// Adds source `s`'s dependencies to `acc`. `seed(t)` is the weight of
    /// pair `(s, t)`.
    fn accumulate<F: Fn(usize) -> f64>(&mut self, g: &Graph, s: usize, seed: F, acc: &mut [f64]) {
        for &v in &self.order {
            self.sigma[v] = 0.0;
            self.dist[v] = usize::MAX;
            self.delta[v] = 0.0;
            self.preds[v].clear();
        }
        self.order.clear();

        self.sigma[s] = 1.0;
        self.dist[s] = 0;
        self.queue.push_back(s);
        while let Some(v) = self.queue.pop_front() {
            self.order.push(v);
            let next = self.dist[v] + 1;
            for &w in g.out_neighbors(v) {
                if self.dist[w] == usize::MAX {
                    self.dist[w] = next;
                    self.queue.push_back(w);
                }
                if self.dist[w] == next {
                    self.sigma[w] += self.sigma[v];
                    self.preds[w].push(v);
                }
            }
        }

        for &w in self.order.iter().rev() {
            if w == s {
                continue;
            }
            let coeff = (seed(w) + self.delta[w]) / self.sigma[w];
            for &v in &self.preds[w] {
                self.delta[v] += self.sigma[v] * coeff;
            }
            acc[w] += self.delta[w];
        }
    }
}

fn brandes<F>(g: &Graph, seed: F) -> Vec<f64>
where
    F: Fn(usize, usize) -> f64 + Sync,
{
    let n = g.node_count();
    let sources: Vec<usize> = (0..n).collect();
    let partials: Vec<Vec<f64>> = sources
        .par_chunks(SOURCES_PER_TASK)
        .map(|chunk| {
            let mut ws = Workspace::new(n);
            let mut acc = vec![0.0; n];
            for &s in chunk {
                ws.accumulate(g, s, |t| seed(s, t), &mut acc);
            }
            acc
        })
        .collect();
    let mut total = vec![0.0; n];
    for partial in partials {
        for (t, p) in total.iter_mut().zip(partial) {
            *t += p;
        }
    }
    total
}

/// Shortest-path betweenness over ordered pairs, following edge directions.
pub fn betweenness(g: &Graph) -> BetweennessScores {
    BetweennessScores(brandes(g, |_, _| 1.0))
}

/// Betweenness with each pair `(s, t)` weighted by `|r_s - r_t|`.
pub fn diverse_betweenness(g: &Graph, a: &AffiliationMatrix) -> Result<BetweennessScores> {
    a.require_two()?;
    if a.node_count() != g.node_count() {
        return Err(Error::LengthMismatch {
            expected: g.node_count(),
            found: a.node_count(),
        });
    }
    let red = a.reds();
    Ok(BetweennessScores(brandes(g, |s, t| (red[s] - red[t]).abs())))
}
