use serde::Serialize;

use super::spectral::Bipartition;
use crate::centrality::{diverse_centrality, Init, SolverConfig};
use crate::graph::{AffiliationMatrix, Graph};
use crate::{Error, Result};

/// The `k` highest-scoring nodes, best first; ties go to the lower id.
pub fn rank_top_k(scores: &[f64], k: usize) -> Result<Vec<usize>> {
    let n = scores.len();
    if k == 0 || k > n {
        return Err(Error::BadK { k, n });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));
    order.truncate(k);
    Ok(order)
}

/// Unordered pairs `{i, j}` inside `top` joined by an edge in either direction
/// whose endpoints fall in different clusters.
pub fn cut_edges_topk(g: &Graph, part: &Bipartition, top: &[usize]) -> usize {
    let mut in_top = vec![false; g.node_count()];
    for &v in top {
        in_top[v] = true;
    }
    let mut count = 0;
    for i in (0..g.node_count()).filter(|&i| in_top[i]) {
        for &j in g.out_neighbors(i) {
            if j == i || !in_top[j] || part.labels[i] == part.labels[j] {
                continue;
            }
            // A mutual pair is seen from both ends; count it from the lower id.
            if i < j || !g.has_edge(j, i) {
                count += 1;
            }
        }
    }
    count
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InitComparison {
    /// Largest per-node gap between the uniform-start solution and any
    /// random-start solution.
    pub max_abs_diff: f64,
    /// Mean per-node gap over all seeds and nodes.
    pub mean_abs_diff: f64,
}

/// Solves Diverse Centrality from the uniform start and from each seeded
/// random start, and measures how far apart the solutions are.
pub fn compare_inits(
    g: &Graph,
    a: &AffiliationMatrix,
    cfg: &SolverConfig,
    seeds: &[u64],
) -> Result<InitComparison> {
    if seeds.is_empty() {
        return Err(Error::BadParams("need at least one random seed".into()));
    }
    let (reference, _) = diverse_centrality(g, a, &cfg.with_init(Init::Uniform))?;
    let mut max_abs_diff = 0.0_f64;
    let mut total = 0.0;
    for &seed in seeds {
        let (s, _) = diverse_centrality(g, a, &cfg.with_init(Init::Random { seed }))?;
        for (x, y) in s.as_slice().iter().zip(reference.as_slice()) {
            let d = (x - y).abs();
            max_abs_diff = max_abs_diff.max(d);
            total += d;
        }
    }
    Ok(InitComparison {
        max_abs_diff,
        mean_abs_diff: total / (seeds.len() * g.node_count()) as f64,
    })
}
