//! Directed graphs, community affiliations and normalised score vectors.

use std::ops::Index;

use crate::sum::compensated_sum;
use crate::{Error, Result};

/// Immutable directed graph over dense node ids `0..n`.
///
/// Out-adjacency lists are sorted and free of duplicates. The in-adjacency is
/// cached at construction since every solver pulls mass along reversed edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from `(src, dst)` pairs. Duplicate edges collapse to one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::BadParams("graph needs at least one node".into()));
        }
        let mut out_edges = vec![Vec::new(); n];
        for (src, dst) in edges {
            for node in [src, dst] {
                if node >= n {
                    return Err(Error::OutOfRangeNode { node, n });
                }
            }
            out_edges[src].push(dst);
        }
        Ok(Self::from_adjacency(out_edges))
    }

    /// Like [`Graph::from_edges`] but also reports how many duplicates were
    /// dropped.
    pub fn from_edges_counted(n: usize, edges: &[(usize, usize)]) -> Result<(Self, usize)> {
        let g = Self::from_edges(n, edges.iter().copied())?;
        let dropped = edges.len() - g.edge_count();
        Ok((g, dropped))
    }

    pub(crate) fn from_adjacency(mut out_edges: Vec<Vec<usize>>) -> Self {
        let n = out_edges.len();
        let mut in_edges = vec![Vec::new(); n];
        for (src, targets) in out_edges.iter_mut().enumerate() {
            targets.sort_unstable();
            targets.dedup();
            for &dst in targets.iter() {
                in_edges[dst].push(src);
            }
        }
        Self { out_edges, in_edges }
    }

    pub fn node_count(&self) -> usize {
        self.out_edges.len()
    }

    /// Number of directed edges.
    pub fn edge_count(&self) -> usize {
        self.out_edges.iter().map(Vec::len).sum()
    }

    pub fn out_degree(&self, node: usize) -> usize {
        self.out_edges[node].len()
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        self.out_edges.iter().map(Vec::len).collect()
    }

    /// Sorted targets of `node`.
    pub fn out_neighbors(&self, node: usize) -> &[usize] {
        &self.out_edges[node]
    }

    /// Sources of edges into `node`, ascending.
    pub fn in_neighbors(&self, node: usize) -> &[usize] {
        &self.in_edges[node]
    }

    pub fn has_edge(&self, src: usize, dst: usize) -> bool {
        self.out_edges[src].binary_search(&dst).is_ok()
    }

    /// All directed edges in `(src, dst)` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_edges
            .iter()
            .enumerate()
            .flat_map(|(src, ts)| ts.iter().map(move |&dst| (src, dst)))
    }

    pub fn sinks(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.node_count()).filter(|&i| self.out_edges[i].is_empty())
    }

    /// Adds an edge from every zero-out-degree node to every other node.
    pub fn patch_sinks(&self) -> Graph {
        let n = self.node_count();
        let mut out = self.out_edges.clone();
        for (i, targets) in out.iter_mut().enumerate() {
            if targets.is_empty() {
                targets.extend((0..n).filter(|&j| j != i));
            }
        }
        Graph::from_adjacency(out)
    }

    /// Undirected view stored with both directions; self-loops are dropped.
    pub fn symmetrize(&self) -> Graph {
        let n = self.node_count();
        let mut out = vec![Vec::new(); n];
        for (src, dst) in self.edges() {
            if src != dst {
                out[src].push(dst);
                out[dst].push(src);
            }
        }
        Graph::from_adjacency(out)
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_unmatched_edge().is_none()
    }

    pub(crate) fn first_unmatched_edge(&self) -> Option<(usize, usize)> {
        self.edges().find(|&(s, t)| !self.has_edge(t, s))
    }

    /// Relabels nodes: node `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.node_count());
        let mut out = vec![Vec::new(); perm.len()];
        for (src, dst) in self.edges() {
            out[perm[src]].push(perm[dst]);
        }
        Graph::from_adjacency(out)
    }

    /// Subgraph induced by `nodes`; node `nodes[k]` becomes `k`.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.node_count()];
        for (k, &v) in nodes.iter().enumerate() {
            index[v] = k;
        }
        let out = nodes
            .iter()
            .map(|&v| {
                self.out_edges[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect()
            })
            .collect();
        Graph::from_adjacency(out)
    }
}

/// Per-node affiliation vectors over `k` communities, each on the unit simplex.
///
/// For two communities the first component is the blue weight `b` and the
/// second the red weight `r`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffiliationMatrix {
    k: usize,
    weights: Vec<f64>,
}

pub const SIMPLEX_TOLERANCE: f64 = 1e-6;

impl AffiliationMatrix {
    /// `weights` holds `n * k` values, row-major.
    pub fn new(k: usize, weights: Vec<f64>) -> Result<Self> {
        if k == 0 {
            return Err(Error::BadParams("need at least one community".into()));
        }
        if !weights.len().is_multiple_of(k) {
            return Err(Error::BadParams(format!(
                "{} weights do not split into rows of {k}",
                weights.len()
            )));
        }
        for (node, row) in weights.chunks_exact(k).enumerate() {
            let sum: f64 = row.iter().sum();
            if row.iter().any(|&x| !(x >= 0.0)) || (sum - 1.0).abs() > SIMPLEX_TOLERANCE {
                return Err(Error::BadSimplex { node, sum });
            }
        }
        Ok(Self { k, weights })
    }

    /// Two-community matrix from red weights; blue is `1 - r`.
    pub fn from_red(red: &[f64]) -> Result<Self> {
        let mut weights = Vec::with_capacity(red.len() * 2);
        for &r in red {
            weights.push(1.0 - r);
            weights.push(r);
        }
        Self::new(2, weights)
    }

    pub fn uniform(n: usize, k: usize) -> Self {
        Self {
            k,
            weights: vec![1.0 / k as f64; n * k],
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn node_count(&self) -> usize {
        self.weights.len() / self.k
    }

    pub fn row(&self, node: usize) -> &[f64] {
        &self.weights[node * self.k..(node + 1) * self.k]
    }

    pub fn rows(&self) -> std::slice::ChunksExact<'_, f64> {
        self.weights.chunks_exact(self.k)
    }

    pub fn require_two(&self) -> Result<()> {
        if self.k == 2 {
            Ok(())
        } else {
            Err(Error::WrongK {
                expected: 2,
                found: self.k,
            })
        }
    }

    /// Blue weight `q[0]`; only meaningful when `k == 2`.
    pub fn blue(&self, node: usize) -> f64 {
        self.weights[node * self.k]
    }

    /// Red weight `q[1]`; only meaningful when `k == 2`.
    pub fn red(&self, node: usize) -> f64 {
        self.weights[node * self.k + 1]
    }

    pub fn reds(&self) -> Vec<f64> {
        (0..self.node_count()).map(|i| self.red(i)).collect()
    }

    /// Node `i` moves to `perm[i]`.
    pub fn relabel_nodes(&self, perm: &[usize]) -> Self {
        let mut weights = vec![0.0; self.weights.len()];
        for (i, row) in self.rows().enumerate() {
            weights[perm[i] * self.k..(perm[i] + 1) * self.k].copy_from_slice(row);
        }
        Self { k: self.k, weights }
    }

    /// Community `c` of every row moves to position `perm[c]`.
    pub fn relabel_communities(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.k);
        let mut weights = vec![0.0; self.weights.len()];
        for (i, row) in self.rows().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                weights[i * self.k + perm[c]] = x;
            }
        }
        Self { k: self.k, weights }
    }

    /// Rows for `nodes`, in that order.
    pub fn select(&self, nodes: &[usize]) -> Self {
        let weights = nodes.iter().flat_map(|&v| self.row(v).iter().copied()).collect();
        Self { k: self.k, weights }
    }
}

/// Nonnegative node scores with unit L1 norm.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreVector(Vec<f64>);

impl ScoreVector {
    pub fn uniform(n: usize) -> Self {
        Self(vec![1.0 / n as f64; n])
    }

    /// Normalises nonnegative weights to unit mass.
    pub fn from_weights(weights: Vec<f64>) -> Result<Self> {
        let total = compensated_sum(weights.iter().copied());
        if !(total > 0.0) || !total.is_finite() {
            return Err(Error::DegenerateMass);
        }
        Ok(Self(weights.into_iter().map(|w| w / total).collect()))
    }

    pub(crate) fn from_normalized_unchecked(scores: Vec<f64>) -> Self {
        Self(scores)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub fn l1_distance(&self, other: &ScoreVector) -> f64 {
        l1_distance(&self.0, &other.0)
    }

    pub fn max_abs_diff(&self, other: &ScoreVector) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl Index<usize> for ScoreVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl AsRef<[f64]> for ScoreVector {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

pub(crate) fn l1_distance(a: &[f64], b: &[f64]) -> f64 {
    compensated_sum(a.iter().zip(b).map(|(x, y)| (x - y).abs()))
}
