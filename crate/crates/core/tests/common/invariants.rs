//! Property checks shared by the property-test suite and the acceptance run.

#![allow(dead_code, clippy::needless_range_loop)]

use divcent::analysis::{
    bucketize, cut_edges_topk, rank_top_k, spectral_bipartition, welch_t_test, Bipartition,
    BUCKET_COUNT,
};
use divcent::betweenness::{betweenness, diverse_betweenness};
use divcent::centrality::{diverse_centrality, pagerank, Aggregator, Init, SolverConfig};
use divcent::{AffiliationMatrix, Graph, ScoreVector};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type Check = Result<(), TestCaseError>;

/// Directed graph on `2..=max_n` nodes, self-loops allowed.
pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<u8>(), n * n).prop_map(move |bits| {
            let edges = (0..n * n)
                .filter(|&c| bits[c] < 80)
                .map(|c| (c / n, c % n));
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn affiliations_for(n: usize, k: usize) -> impl Strategy<Value = AffiliationMatrix> {
    proptest::collection::vec(0.01f64..1.0, n * k).prop_map(move |raw| {
        let weights = raw
            .chunks(k)
            .flat_map(|row| {
                let total: f64 = row.iter().sum();
                row.iter().map(move |x| x / total).collect::<Vec<_>>()
            })
            .collect();
        AffiliationMatrix::new(k, weights).unwrap()
    })
}

/// Sink-free graph with strictly positive affiliations over `1..=3` communities.
pub fn instance(max_n: usize) -> impl Strategy<Value = (Graph, AffiliationMatrix)> {
    (graph(max_n), 1usize..=3).prop_flat_map(|(g, k)| {
        let g = g.patch_sinks();
        let n = g.node_count();
        (Just(g), affiliations_for(n, k))
    })
}

pub fn instance_k2(max_n: usize) -> impl Strategy<Value = (Graph, AffiliationMatrix)> {
    graph(max_n).prop_flat_map(|g| {
        let g = g.patch_sinks();
        let n = g.node_count();
        (Just(g), affiliations_for(n, 2))
    })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

pub fn with_permutation<S: Strategy<Value = (Graph, AffiliationMatrix)>>(
    s: S,
) -> impl Strategy<Value = (Graph, AffiliationMatrix, Vec<usize>)> {
    s.prop_flat_map(|(g, a)| {
        let n = g.node_count();
        (Just(g), Just(a), permutation(n))
    })
}

/// Scores with deliberate ties.
pub fn scores(max_n: usize) -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(0u8..20, 1..=max_n)
        .prop_map(|v| v.into_iter().map(|x| f64::from(x) / 20.0).collect())
}

fn solver() -> SolverConfig {
    SolverConfig {
        epsilon: 1e-13,
        ..SolverConfig::default()
    }
}

fn check_normalized(s: &ScoreVector) -> Check {
    prop_assert!(s.as_slice().iter().all(|&x| x >= 0.0));
    let total: f64 = s.as_slice().iter().sum();
    prop_assert!((total - 1.0).abs() <= 1e-9, "sum {}", total);
    Ok(())
}

fn close(a: &ScoreVector, b: &ScoreVector, tol: f64) -> Check {
    let gap = a.max_abs_diff(b);
    prop_assert!(gap <= tol, "gap {}", gap);
    Ok(())
}

pub fn normalization((g, a): (Graph, AffiliationMatrix)) -> Check {
    let (pr, _) = pagerank(&g, &solver()).unwrap();
    check_normalized(&pr)?;
    for f in [Aggregator::Minimum, Aggregator::GeometricMean] {
        let (dc, _) = diverse_centrality(&g, &a, &solver().with_aggregator(f)).unwrap();
        check_normalized(&dc)?;
    }
    Ok(())
}

pub fn l1_and_single_community_reduce_to_pagerank((g, a): (Graph, AffiliationMatrix)) -> Check {
    let (pr, _) = pagerank(&g, &solver()).unwrap();
    let (dc, _) = diverse_centrality(&g, &a, &solver().with_aggregator(Aggregator::L1)).unwrap();
    close(&dc, &pr, 1e-8)?;
    let single = AffiliationMatrix::uniform(g.node_count(), 1);
    let (dc, _) = diverse_centrality(&g, &single, &solver()).unwrap();
    close(&dc, &pr, 1e-8)
}

pub fn balanced_reduces_to_pagerank(g: Graph) -> Check {
    let g = g.patch_sinks();
    let (pr, _) = pagerank(&g, &solver()).unwrap();
    for k in 2..=3 {
        let a = AffiliationMatrix::uniform(g.node_count(), k);
        for f in [Aggregator::Minimum, Aggregator::GeometricMean] {
            let (dc, _) = diverse_centrality(&g, &a, &solver().with_aggregator(f)).unwrap();
            close(&dc, &pr, 1e-8)?;
        }
    }
    Ok(())
}

pub fn community_relabel_invariance((g, a): (Graph, AffiliationMatrix)) -> Check {
    let k = a.k();
    let perm: Vec<usize> = (0..k).map(|c| (c + 1) % k).collect();
    let (s, _) = diverse_centrality(&g, &a, &solver()).unwrap();
    let (t, _) = diverse_centrality(&g, &a.relabel_communities(&perm), &solver()).unwrap();
    close(&s, &t, 1e-10)
}

pub fn node_relabel_equivariance((g, a, perm): (Graph, AffiliationMatrix, Vec<usize>)) -> Check {
    let (s, _) = diverse_centrality(&g, &a, &solver()).unwrap();
    let (t, _) = diverse_centrality(&g.relabel(&perm), &a.relabel_nodes(&perm), &solver()).unwrap();
    for i in 0..perm.len() {
        prop_assert!((s[i] - t[perm[i]]).abs() <= 1e-10);
    }
    let (p, _) = pagerank(&g, &solver()).unwrap();
    let (q, _) = pagerank(&g.relabel(&perm), &solver()).unwrap();
    for i in 0..perm.len() {
        prop_assert!((p[i] - q[perm[i]]).abs() <= 1e-10);
    }
    Ok(())
}

pub fn betweenness_equivariance((g, a, perm): (Graph, AffiliationMatrix, Vec<usize>)) -> Check {
    let (h, b) = (g.relabel(&perm), a.relabel_nodes(&perm));
    let (bc, bc2) = (betweenness(&g), betweenness(&h));
    let (dbc, dbc2) = (diverse_betweenness(&g, &a).unwrap(), diverse_betweenness(&h, &b).unwrap());
    for i in 0..perm.len() {
        prop_assert!((bc.0[i] - bc2.0[perm[i]]).abs() <= 1e-9);
        prop_assert!((dbc.0[i] - dbc2.0[perm[i]]).abs() <= 1e-9);
    }
    Ok(())
}

pub fn init_independence((g, a): (Graph, AffiliationMatrix), seed: u64) -> Check {
    let (s, _) = diverse_centrality(&g, &a, &solver()).unwrap();
    let (t, _) = diverse_centrality(&g, &a, &solver().with_init(Init::Random { seed })).unwrap();
    close(&s, &t, 1e-9)
}

pub fn bucketize_partitions(scores: Vec<f64>, analyzed: Vec<usize>) -> Check {
    match bucketize(&scores, &analyzed) {
        Ok(assign) => {
            prop_assert_eq!(assign.sizes().iter().sum::<usize>(), analyzed.len());
            prop_assert!(assign.buckets.iter().all(|&b| b < BUCKET_COUNT));
            prop_assert!(assign.edges.windows(2).all(|w| w[0] <= w[1]));
            // Bucket order follows score order.
            for (x, (&u, &bu)) in assign.nodes.iter().zip(&assign.buckets).enumerate() {
                for (&v, &bv) in assign.nodes[x..].iter().zip(&assign.buckets[x..]) {
                    if scores[u] < scores[v] {
                        prop_assert!(bu <= bv);
                    }
                }
            }
        }
        Err(_) => {
            let first = scores[analyzed[0]];
            prop_assert!(analyzed.iter().all(|&i| scores[i] == first));
        }
    }
    Ok(())
}

pub fn top_k_prefix(scores: Vec<f64>) -> Check {
    let n = scores.len();
    let full = rank_top_k(&scores, n).unwrap();
    for k in 1..=n {
        let top = rank_top_k(&scores, k).unwrap();
        prop_assert_eq!(&top[..], &full[..k]);
    }
    for w in full.windows(2) {
        let (a, b) = (scores[w[0]], scores[w[1]]);
        prop_assert!(a > b || (a == b && w[0] < w[1]));
    }
    Ok(())
}

pub fn cut_count_monotone(g: Graph, labels: Vec<bool>, scores: Vec<f64>) -> Check {
    let n = g.node_count();
    let part = Bipartition {
        labels: (0..n).map(|i| u8::from(labels[i % labels.len()])).collect(),
    };
    let scores: Vec<f64> = (0..n).map(|i| scores[i % scores.len()]).collect();
    let order = rank_top_k(&scores, n).unwrap();
    let mut previous = 0;
    for k in 1..=n {
        let count = cut_edges_topk(&g, &part, &order[..k]);
        prop_assert!(count >= previous);
        previous = count;
    }
    prop_assert_eq!(cut_edges_topk(&g, &part, &order[..1]), 0);
    Ok(())
}

pub fn welch_antisymmetric(a: Vec<f64>, b: Vec<f64>) -> Check {
    let ab = welch_t_test(&a, &b).unwrap();
    let ba = welch_t_test(&b, &a).unwrap();
    prop_assert!(ab.t == -ba.t || (ab.t.is_nan() && ba.t.is_nan()));
    prop_assert_eq!(ab.p_value, ba.p_value);
    prop_assert!((0.0..=1.0).contains(&ab.p_value));
    Ok(())
}

/// Two dense blocks with a few cross links, relabelled by `perm`.
pub fn spectral_permutation_invariance(block: usize, cross: Vec<(usize, usize)>, perm: Vec<usize>) -> Check {
    let n = 2 * block;
    let mut pairs = Vec::new();
    for base in [0, block] {
        for i in 0..block {
            for j in i + 1..block {
                if (i + j) % 3 != 0 {
                    pairs.push((base + i, base + j));
                }
            }
        }
    }
    pairs.extend(cross.iter().map(|&(i, j)| (i % block, block + j % block)));
    let g = Graph::from_edges(n, pairs.iter().flat_map(|&(a, b)| [(a, b), (b, a)])).unwrap();
    let perm = &perm[..n];
    let base = spectral_bipartition(&g, &Default::default()).unwrap();
    let moved = spectral_bipartition(&g.relabel(perm), &Default::default()).unwrap();
    let same = (0..n).all(|i| base.labels[i] == moved.labels[perm[i]]);
    let swapped = (0..n).all(|i| base.labels[i] != moved.labels[perm[i]]);
    prop_assert!(same || swapped);
    Ok(())
}
