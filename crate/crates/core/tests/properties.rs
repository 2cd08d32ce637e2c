mod common;

use common::invariants::*;
use common::{betweenness_enumerated, max_abs_diff};
use divcent::betweenness::{betweenness, diverse_betweenness};
use divcent::centrality::{diverse_centrality, Aggregator, SolverConfig};
use divcent::generators::{GenSpec, Model};
use divcent::io::{self, AffiliationMode};
use divcent::AffiliationMatrix;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        let mut buf = Vec::new();
        io::write_edge_list(&g, &mut buf).unwrap();
        let (back, dropped) = io::load_edge_list(&buf[..]).unwrap().into_graph(g.node_count()).unwrap();
        prop_assert_eq!(dropped, 0);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn patch_sinks_is_idempotent(g in graph(12)) {
        let once = g.patch_sinks();
        prop_assert_eq!(once.sinks().count(), 0);
        prop_assert_eq!(once.patch_sinks(), once);
    }

    #[test]
    fn symmetrize_is_symmetric_and_idempotent(g in graph(12)) {
        let s = g.symmetrize();
        prop_assert!(s.is_symmetric());
        prop_assert_eq!(s.symmetrize(), s.clone());
        for (a, b) in g.edges().filter(|(a, b)| a != b) {
            prop_assert!(s.has_edge(a, b) && s.has_edge(b, a));
        }
    }

    #[test]
    fn loaded_affiliations_lie_on_simplex(
        rows in proptest::collection::vec((0.01f64..1.0, 0.01f64..1.0, -4e-4f64..4e-4), 1..20),
    ) {
        let mut text = String::new();
        for (i, (x, y, noise)) in rows.iter().enumerate() {
            let total = x + y;
            text.push_str(&format!("{i},{},{}\n", x / total + noise, y / total));
        }
        let a = io::load_affiliations(text.as_bytes(), rows.len(), AffiliationMode::Vector { k: 2 }).unwrap();
        for row in a.rows() {
            prop_assert!(row.iter().all(|&x| x >= 0.0));
            prop_assert!((row.iter().sum::<f64>() - 1.0).abs() <= 1e-6);
        }
    }

    #[test]
    fn scores_are_normalized(case in instance(10)) {
        normalization(case)?;
    }

    #[test]
    fn l1_or_single_community_is_pagerank(case in instance(10)) {
        l1_and_single_community_reduce_to_pagerank(case)?;
    }

    #[test]
    fn balanced_affiliations_give_pagerank(g in graph(10)) {
        balanced_reduces_to_pagerank(g)?;
    }

    #[test]
    fn community_labels_do_not_matter(case in instance(10)) {
        community_relabel_invariance(case)?;
    }

    #[test]
    fn node_labels_permute_scores(case in with_permutation(instance(10))) {
        node_relabel_equivariance(case)?;
    }

    #[test]
    fn node_labels_permute_betweenness(case in with_permutation(instance_k2(8))) {
        betweenness_equivariance(case)?;
    }

    #[test]
    fn start_vector_does_not_matter(case in instance(10), seed in any::<u64>()) {
        init_independence(case, seed)?;
    }

    #[test]
    fn vanishing_damping_gives_own_weight(case in instance(8)) {
        let (g, a) = case;
        let cfg = SolverConfig { damping: 1e-9, epsilon: 1e-14, ..SolverConfig::default() };
        let (s, _) = diverse_centrality(&g, &a, &cfg).unwrap();
        let own: Vec<f64> = a.rows().map(|row| row.iter().copied().fold(f64::INFINITY, f64::min)).collect();
        let total: f64 = own.iter().sum();
        let expected: Vec<f64> = own.iter().map(|x| x / total).collect();
        prop_assert!(max_abs_diff(s.as_slice(), &expected) < 1e-7);
    }

    #[test]
    fn diverse_betweenness_bounded_by_betweenness(case in instance_k2(8)) {
        let (g, a) = case;
        let bc = betweenness(&g);
        let dbc = diverse_betweenness(&g, &a).unwrap();
        for (d, b) in dbc.0.iter().zip(&bc.0) {
            prop_assert!(*d <= *b + 1e-12);
        }
    }

    #[test]
    fn two_block_dbc_counts_cross_pairs(g in graph(8), sides in proptest::collection::vec(any::<bool>(), 8)) {
        let n = g.node_count();
        let red: Vec<f64> = (0..n).map(|i| if sides[i] { 1.0 } else { 0.0 }).collect();
        let a = AffiliationMatrix::from_red(&red).unwrap();
        let dbc = diverse_betweenness(&g, &a).unwrap();
        let cross = betweenness_enumerated(&g, |s, t| if sides[s] != sides[t] { 1.0 } else { 0.0 });
        prop_assert!(max_abs_diff(dbc.as_slice(), &cross) < 1e-12);
    }

    #[test]
    fn generated_graphs_are_simple_and_bidirected(seed in any::<u64>(), model in 0usize..3, n in 2usize..60) {
        let spec = GenSpec { n, m: n.min(5), e: 0.3, ..GenSpec::new(Model::BASIC[model], seed) };
        let generated = spec.generate().unwrap();
        for (s, t) in generated.graph.edges() {
            prop_assert!(s != t);
            prop_assert!(generated.graph.has_edge(t, s));
        }
        for row in generated.affiliations.rows() {
            prop_assert_eq!(row[0], 1.0 - row[1]);
        }
        let again = spec.generate().unwrap();
        prop_assert_eq!(again.graph, generated.graph);
        prop_assert_eq!(again.affiliations, generated.affiliations);
    }

    #[test]
    fn buckets_partition_analyzed_nodes(
        scores in proptest::collection::vec(0.0f64..1.0, 2..60),
        pick in proptest::collection::vec(any::<bool>(), 60),
    ) {
        let mut analyzed: Vec<usize> = (0..scores.len()).filter(|&i| pick[i]).collect();
        if analyzed.is_empty() {
            analyzed.push(0);
        }
        bucketize_partitions(scores, analyzed)?;
    }

    #[test]
    fn top_k_is_a_prefix(s in scores(40)) {
        top_k_prefix(s)?;
    }

    #[test]
    fn cut_count_grows_with_k(
        g in graph(16),
        labels in proptest::collection::vec(any::<bool>(), 1..16),
        s in scores(16),
    ) {
        cut_count_monotone(g, labels, s)?;
    }

    #[test]
    fn welch_swaps_sign(
        a in proptest::collection::vec(-10.0f64..10.0, 2..30),
        b in proptest::collection::vec(-10.0f64..10.0, 2..30),
    ) {
        welch_antisymmetric(a, b)?;
    }

    #[test]
    fn spectral_split_ignores_labels(
        (block, perm) in (4usize..10).prop_flat_map(|b| (Just(b), permutation(2 * b))),
        cross in proptest::collection::vec((0usize..100, 0usize..100), 1..3),
    ) {
        spectral_permutation_invariance(block, cross, perm)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn geometric_mean_also_relabel_invariant(case in instance(10)) {
        let (g, a) = case;
        let k = a.k();
        let perm: Vec<usize> = (0..k).rev().collect();
        let cfg = SolverConfig { epsilon: 1e-13, ..SolverConfig::default() }.with_aggregator(Aggregator::GeometricMean);
        let (s, _) = diverse_centrality(&g, &a, &cfg).unwrap();
        let (t, _) = diverse_centrality(&g, &a.relabel_communities(&perm), &cfg).unwrap();
        prop_assert!(s.max_abs_diff(&t) < 1e-10);
    }
}
