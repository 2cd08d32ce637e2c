//! Two-way spectral clustering by the sign pattern of the Fiedler vector of
//! the symmetric normalised Laplacian `L = I - D^{-1/2} A D^{-1/2}`.
//!
//! The eigenvector is found by block power iteration with Rayleigh-Ritz on
//! `B = (I + D^{-1/2} A D^{-1/2}) / 2 = I - L/2`, deflated against the trivial
//! eigenvector `D^{1/2} 1`. `B` is positive semidefinite, so its dominant
//! remaining eigenpair is the Fiedler pair of `L`.

use nalgebra::{DMatrix, SymmetricEigen};
use rand::Rng;
use serde::Serialize;

use crate::graph::Graph;
use crate::rng;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    /// Cluster id, 0 or 1, per node.
    pub labels: Vec<u8>,
}

impl Bipartition {
    pub fn sizes(&self) -> [usize; 2] {
        let ones = self.labels.iter().filter(|&&l| l == 1).count();
        [self.labels.len() - ones, ones]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralConfig {
    /// Bound on `||L x - lambda x||` for the returned unit vector.
    pub residual: f64,
    pub max_iters: usize,
    /// Block width of the subspace iteration.
    pub block: usize,
    pub seed: u64,
}

impl Default for SpectralConfig {
    fn default() -> Self {
        Self {
            residual: 1e-8,
            max_iters: 20_000,
            block: 4,
            seed: 0x5eed,
        }
    }
}

fn check_connected(g: &Graph) -> Result<()> {
    let n = g.node_count();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in g.out_neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    if count == n {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

struct Operator<'a> {
    g: &'a Graph,
    inv_sqrt_degree: Vec<f64>,
}

impl Operator<'_> {
    /// `y = B x`.
    fn apply(&self, x: &[f64], y: &mut [f64]) {
        for (i, yi) in y.iter_mut().enumerate() {
            let s: f64 = self
                .g
                .out_neighbors(i)
                .iter()
                .map(|&j| x[j] * self.inv_sqrt_degree[j])
                .sum();
            *yi = 0.5 * (x[i] + s * self.inv_sqrt_degree[i]);
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(v: &mut [f64]) -> f64 {
    let norm = dot(v, v).sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    }
    norm
}

/// Gram-Schmidt of every column against `trivial` and the preceding columns.
/// Columns that collapse are refilled from `rng`.
fn orthonormalize(cols: &mut [Vec<f64>], trivial: &[f64], rng: &mut impl Rng) {
    for c in 0..cols.len() {
        loop {
            let (done, rest) = cols.split_at_mut(c);
            let v = &mut rest[0];
            for _ in 0..2 {
                for basis in std::iter::once(trivial).chain(done.iter().map(Vec::as_slice)) {
                    let proj = dot(v, basis);
                    v.iter_mut().zip(basis).for_each(|(x, b)| *x -= proj * b);
                }
            }
            if normalize(v) > 1e-10 {
                break;
            }
            v.iter_mut().for_each(|x| *x = rng.gen::<f64>() - 0.5);
        }
    }
}

/// Labels nodes by the sign of the Fiedler vector (non-positive entries form
/// cluster 0, node 0 is always in cluster 0 unless its entry is exactly zero).
/// The graph must be symmetric and connected.
pub fn spectral_bipartition(g: &Graph, cfg: &SpectralConfig) -> Result<Bipartition> {
    if let Some((s, t)) = g.first_unmatched_edge() {
        return Err(Error::NotSymmetric(s, t));
    }
    let n = g.node_count();
    check_connected(g)?;
    if n == 1 {
        return Ok(Bipartition { labels: vec![0] });
    }
    let fiedler = fiedler_vector(g, cfg)?;
    let flip = fiedler[0] > 0.0;
    let labels = fiedler
        .iter()
        .map(|&x| {
            let x = if flip { -x } else { x };
            u8::from(x > 0.0)
        })
        .collect();
    Ok(Bipartition { labels })
}

/// Unit Fiedler vector of the normalised Laplacian (sign arbitrary).
pub fn fiedler_vector(g: &Graph, cfg: &SpectralConfig) -> Result<Vec<f64>> {
    let n = g.node_count();
    let degrees = g.out_degrees();
    let op = Operator {
        g,
        inv_sqrt_degree: degrees.iter().map(|&d| 1.0 / (d as f64).sqrt()).collect(),
    };
    let mut trivial: Vec<f64> = degrees.iter().map(|&d| (d as f64).sqrt()).collect();
    normalize(&mut trivial);

    let width = cfg.block.clamp(1, n - 1);
    let mut rng = rng::stream(cfg.seed, 0);
    let mut block: Vec<Vec<f64>> = (0..width)
        .map(|_| (0..n).map(|_| rng.gen::<f64>() - 0.5).collect())
        .collect();
    orthonormalize(&mut block, &trivial, &mut rng);

    let mut images = vec![vec![0.0; n]; width];
    // L = 2 (I - B), so a B-residual of r is an L-residual of 2r.
    let tolerance = cfg.residual / 2.0;
    let mut last_residual = f64::NAN;
    for _ in 0..cfg.max_iters {
        for (x, y) in block.iter().zip(images.iter_mut()) {
            op.apply(x, y);
        }
        let h = DMatrix::from_fn(width, width, |i, j| 0.5 * (dot(&block[i], &images[j]) + dot(&block[j], &images[i])));
        let eig = SymmetricEigen::new(h);
        let mut order: Vec<usize> = (0..width).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));

        let rotate = |cols: &[Vec<f64>]| -> Vec<Vec<f64>> {
            order
                .iter()
                .map(|&k| {
                    let mut v = vec![0.0; n];
                    for (c, col) in cols.iter().enumerate() {
                        let w = eig.eigenvectors[(c, k)];
                        v.iter_mut().zip(col).for_each(|(acc, x)| *acc += w * x);
                    }
                    v
                })
                .collect()
        };
        let ritz = rotate(&block);
        let ritz_images = rotate(&images);
        let theta = eig.eigenvalues[order[0]];
        let residual = ritz_images[0]
            .iter()
            .zip(&ritz[0])
            .map(|(y, x)| (y - theta * x).powi(2))
            .sum::<f64>()
            .sqrt();
        last_residual = residual;
        if residual <= tolerance {
            return Ok(ritz.into_iter().next().expect("block is nonempty"));
        }
        block = ritz_images;
        orthonormalize(&mut block, &trivial, &mut rng);
    }
    Err(Error::NonConvergence {
        iterations: cfg.max_iters,
        last_delta: 2.0 * last_residual,
    })
}
