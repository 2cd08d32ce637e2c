//! Independent reference implementations used by the integration tests.
//! Everything here is dense and deliberately naive.

#![allow(dead_code, clippy::needless_range_loop)]

pub mod invariants;

use divcent::centrality::Aggregator;
use divcent::{AffiliationMatrix, Graph};
use rand::Rng;

pub fn rng(seed: u64) -> impl Rng {
    divcent::rng::stream(seed, 0)
}

pub fn bidirected(n: usize, pairs: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, pairs.iter().flat_map(|&(a, b)| [(a, b), (b, a)])).unwrap()
}

/// Directed graph with each ordered pair (self-loops excluded) present with
/// probability `density`.
pub fn random_digraph(rng: &mut impl Rng, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if s != t && rng.gen_bool(density) {
                edges.push((s, t));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_undirected(rng: &mut impl Rng, n: usize, density: f64) -> Graph {
    let mut pairs = Vec::new();
    for s in 0..n {
        for t in s + 1..n {
            if rng.gen_bool(density) {
                pairs.push((s, t));
            }
        }
    }
    bidirected(n, &pairs)
}

/// Rows drawn uniformly from the simplex with strictly positive entries.
pub fn random_affiliations(rng: &mut impl Rng, n: usize, k: usize) -> AffiliationMatrix {
    let mut weights = Vec::with_capacity(n * k);
    for _ in 0..n {
        let raw: Vec<f64> = (0..k).map(|_| -(rng.gen_range(1e-3..1.0f64)).ln()).collect();
        let total: f64 = raw.iter().sum();
        weights.extend(raw.iter().map(|x| x / total));
    }
    AffiliationMatrix::new(k, weights).unwrap()
}

fn dense_adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.node_count();
    let mut adj = vec![vec![false; n]; n];
    for (s, t) in g.edges() {
        adj[s][t] = true;
    }
    adj
}

/// Solves `m x = b` by Gaussian elimination with partial pivoting.
pub fn solve(mut m: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .unwrap();
        m.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let factor = m[row][col] / m[col][col];
            for c in col..n {
                m[row][c] -= factor * m[col][c];
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let tail: f64 = (row + 1..n).map(|c| m[row][c] * x[c]).sum();
        x[row] = (b[row] - tail) / m[row][row];
    }
    x
}

/// PageRank as the solution of `(I - p M) x = (1-p)/n`, normalised.
pub fn pagerank_direct(g: &Graph, p: f64) -> Vec<f64> {
    let n = g.node_count();
    let adj = dense_adjacency(g);
    let mut m = vec![vec![0.0; n]; n];
    for i in 0..n {
        m[i][i] = 1.0;
    }
    for j in 0..n {
        let d = adj[j].iter().filter(|&&e| e).count() as f64;
        for i in 0..n {
            if adj[j][i] {
                m[i][j] -= p / d;
            }
        }
    }
    let x = solve(m, vec![(1.0 - p) / n as f64; n]);
    let total: f64 = x.iter().sum();
    x.into_iter().map(|v| v / total).collect()
}

fn aggregate(f: Aggregator, x: &[f64]) -> f64 {
    match f {
        Aggregator::Minimum => x.iter().copied().fold(f64::INFINITY, f64::min),
        Aggregator::GeometricMean => x.iter().product::<f64>().powf(1.0 / x.len() as f64),
        Aggregator::L1 => x.iter().sum(),
    }
}

/// One application of the Diverse Centrality map, dense formulation.
pub fn dc_map(adj: &[Vec<bool>], a: &AffiliationMatrix, p: f64, f: Aggregator, s: &[f64]) -> Vec<f64> {
    let n = s.len();
    let k = a.k();
    let degree: Vec<f64> = adj.iter().map(|row| row.iter().filter(|&&e| e).count() as f64).collect();
    let mut t = vec![0.0; n];
    for i in 0..n {
        let mut x = vec![0.0; k];
        for c in 0..k {
            let mut inflow = 0.0;
            for j in 0..n {
                if adj[j][i] {
                    inflow += s[j] / degree[j] * a.row(j)[c];
                }
            }
            x[c] = (1.0 - p) * a.row(i)[c] / n as f64 + p * inflow;
        }
        t[i] = aggregate(f, &x);
    }
    let total: f64 = t.iter().sum();
    t.into_iter().map(|v| v / total).collect()
}

/// Fixed point of the Diverse Centrality map reached from several starts.
/// Panics if the starts disagree, which would make the oracle ambiguous.
pub fn dc_multistart(g: &Graph, a: &AffiliationMatrix, p: f64, f: Aggregator, starts: usize, seed: u64) -> Vec<f64> {
    let n = g.node_count();
    let adj = dense_adjacency(g);
    let mut r = rng(seed);
    let mut solutions: Vec<Vec<f64>> = Vec::new();
    for start in 0..starts {
        let mut s: Vec<f64> = if start == 0 {
            vec![1.0 / n as f64; n]
        } else {
            let raw: Vec<f64> = (0..n).map(|_| r.gen_range(0.01..1.0)).collect();
            let total: f64 = raw.iter().sum();
            raw.into_iter().map(|v| v / total).collect()
        };
        for _ in 0..100_000 {
            let next = dc_map(&adj, a, p, f, &s);
            let delta: f64 = next.iter().zip(&s).map(|(x, y)| (x - y).abs()).sum();
            s = next;
            if delta < 1e-15 {
                break;
            }
        }
        solutions.push(s);
    }
    for other in &solutions[1..] {
        let gap = max_abs_diff(&solutions[0], other);
        assert!(gap < 1e-11, "oracle starts disagree by {gap}");
    }
    solutions.swap_remove(0)
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Betweenness by explicit enumeration of every shortest path, weighting
/// ordered pair `(s, t)` by `weight(s, t)`.
pub fn betweenness_enumerated(g: &Graph, weight: impl Fn(usize, usize) -> f64) -> Vec<f64> {
    let n = g.node_count();
    let adj = dense_adjacency(g);
    let mut scores = vec![0.0; n];
    for s in 0..n {
        for t in 0..n {
            if s == t {
                continue;
            }
            let mut paths: Vec<Vec<usize>> = Vec::new();
            let mut best = usize::MAX;
            let mut stack = vec![vec![s]];
            while let Some(path) = stack.pop() {
                let last = *path.last().unwrap();
                if last == t {
                    match path.len().cmp(&best) {
                        std::cmp::Ordering::Less => {
                            best = path.len();
                            paths = vec![path];
                        }
                        std::cmp::Ordering::Equal => paths.push(path),
                        std::cmp::Ordering::Greater => {}
                    }
                    continue;
                }
                if path.len() >= best {
                    continue;
                }
                for w in 0..n {
                    if adj[last][w] && !path.contains(&w) {
                        let mut next = path.clone();
                        next.push(w);
                        stack.push(next);
                    }
                }
            }
            if paths.is_empty() {
                continue;
            }
            let share = weight(s, t) / paths.len() as f64;
            for path in &paths {
                for &v in &path[1..path.len() - 1] {
                    scores[v] += share;
                }
            }
        }
    }
    scores
}

/// Welch t, degrees of freedom and two-sided p from the textbook formulas.
pub fn welch_reference(a: &[f64], b: &[f64]) -> (f64, f64, f64) {
    use statrs::distribution::{ContinuousCDF, StudentsT};
    let stats = |x: &[f64]| {
        let n = x.len() as f64;
        let m = x.iter().sum::<f64>() / n;
        let v = x.iter().map(|y| (y - m).powi(2)).sum::<f64>() / (n - 1.0);
        (n, m, v)
    };
    let (na, ma, va) = stats(a);
    let (nb, mb, vb) = stats(b);
    let se2 = va / na + vb / nb;
    let t = (ma - mb) / se2.sqrt();
    let df = se2 * se2 / ((va / na).powi(2) / (na - 1.0) + (vb / nb).powi(2) / (nb - 1.0));
    let dist = StudentsT::new(0.0, 1.0, df).unwrap();
    (t, df, 2.0 * dist.sf(t.abs()))
}

/// Normalised-cut value of a labelling of an undirected graph.
pub fn normalized_cut(g: &Graph, labels: &[u8]) -> f64 {
    let mut cut = 0.0;
    let mut vol = [0.0; 2];
    for (s, t) in g.edges() {
        vol[labels[s] as usize] += 1.0;
        if labels[s] != labels[t] {
            cut += 1.0;
        }
    }
    // Each undirected cut edge was seen twice.
    cut /= 2.0;
    cut / vol[0] + cut / vol[1]
}

/// Cut edges among `top` by checking every pair.
pub fn cut_count_pairs(g: &Graph, labels: &[u8], top: &[usize]) -> usize {
    let mut count = 0;
    for (x, &i) in top.iter().enumerate() {
        for &j in &top[x + 1..] {
            if labels[i] != labels[j] && (g.has_edge(i, j) || g.has_edge(j, i)) {
                count += 1;
            }
        }
    }
    count
}
