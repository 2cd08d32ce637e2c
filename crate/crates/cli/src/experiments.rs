//! Experiment runners. Every run draws a fresh graph from a seed derived from
//! `(master seed, run index)`; runs execute on the rayon pool and are
//! aggregated in run order, so results do not depend on scheduling.

use divcent::analysis::{
    bucketize, classify_neighborhood, compare_inits, cut_edges_topk, largest_component, mean,
    rank_top_k, spectral_bipartition, variance, welch_t_test, NeighborhoodClass, TTestResult,
    BUCKET_COUNT,
};
use divcent::betweenness::diverse_betweenness;
use divcent::centrality::{
    diverse_centrality, neighbor_polarity, pagerank, reweight_neighbor_bias, reweight_node_bias,
    SolverConfig,
};
use divcent::generators::{
    change_local_polarity, change_neighborhood_polarity, nine_clusters, planted_blocks, GenSpec,
    LocalPolarityParams, Model, NeighborhoodPolarityParams, NineClustersParams,
    PlantedBlocksParams,
};
use divcent::rng::run_seed;
use divcent::{AffiliationMatrix, Error, Graph, Result};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub runs: usize,
    pub seed: u64,
    pub solver: SolverConfig,
    pub alpha: f64,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            runs: 50,
            seed: 1,
            solver: SolverConfig::default(),
            alpha: divcent::analysis::DEFAULT_ALPHA,
        }
    }
}

fn run_all<T, F>(runs: usize, master: u64, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64) -> Result<T> + Sync + Send,
{
    (0..runs)
        .into_par_iter()
        .map(|i| f(run_seed(master, i as u64)))
        .collect()
}

fn model_master(seed: u64, model: Model) -> u64 {
    run_seed(seed, 1_000 + Model::BASIC.iter().position(|&m| m == model).unwrap_or(9) as u64)
}

fn basic_graph(model: Model, n: usize, seed: u64) -> Result<(Graph, AffiliationMatrix)> {
    let spec = GenSpec {
        n,
        m: 20.min(n),
        ..GenSpec::new(model, seed)
    };
    let generated = spec.generate()?;
    Ok((generated.graph.patch_sinks(), generated.affiliations))
}

fn welch_or_none(a: &[f64], b: &[f64]) -> Option<TTestResult> {
    welch_t_test(a, b).ok()
}

fn mean_or_nan(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        f64::NAN
    } else {
        mean(xs)
    }
}

// ---------------------------------------------------------------------------
// Convergence

#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceSummary {
    pub model: Model,
    pub n: usize,
    pub pagerank_iterations: Vec<usize>,
    pub dc_iterations: Vec<usize>,
    pub dc_converged: Vec<bool>,
    pub pagerank_mean: f64,
    pub dc_mean: f64,
    /// `dc_mean / pagerank_mean`.
    pub ratio: f64,
    pub all_converged: bool,
}

/// Iteration counts of PageRank and Diverse Centrality from the uniform start.
pub fn convergence(model: Model, n: usize, cfg: &ExperimentConfig) -> Result<ConvergenceSummary> {
    let solver = cfg.solver.with_init(divcent::centrality::Init::Uniform);
    let runs = run_all(cfg.runs, model_master(cfg.seed, model), |seed| {
        let (g, a) = basic_graph(model, n, seed)?;
        let (_, pr) = pagerank(&g, &solver)?;
        match diverse_centrality(&g, &a, &solver) {
            Ok((_, dc)) => Ok((pr.iterations, dc.iterations, true)),
            Err(Error::NonConvergence { iterations, .. }) => Ok((pr.iterations, iterations, false)),
            Err(e) => Err(e),
        }
    })?;
    let pagerank_iterations: Vec<usize> = runs.iter().map(|r| r.0).collect();
    let dc_iterations: Vec<usize> = runs.iter().map(|r| r.1).collect();
    let dc_converged: Vec<bool> = runs.iter().map(|r| r.2).collect();
    let avg = |xs: &[usize]| xs.iter().sum::<usize>() as f64 / xs.len().max(1) as f64;
    let (pagerank_mean, dc_mean) = (avg(&pagerank_iterations), avg(&dc_iterations));
    Ok(ConvergenceSummary {
        model,
        n,
        all_converged: dc_converged.iter().all(|&c| c),
        pagerank_iterations,
        dc_iterations,
        dc_converged,
        pagerank_mean,
        dc_mean,
        ratio: dc_mean / pagerank_mean,
    })
}

// ---------------------------------------------------------------------------
// Uniqueness

#[derive(Debug, Clone, Serialize)]
pub struct UniquenessSummary {
    pub model: Model,
    pub n: usize,
    pub max_abs_diff: Vec<f64>,
    pub mean_abs_diff: Vec<f64>,
    pub worst: f64,
    pub average: f64,
}

/// Uniform versus seeded random initialisation, one random start per run.
pub fn uniqueness(model: Model, n: usize, cfg: &ExperimentConfig) -> Result<UniquenessSummary> {
    let runs = run_all(cfg.runs, model_master(cfg.seed ^ 0x756e_6971, model), |seed| {
        let (g, a) = basic_graph(model, n, seed)?;
        compare_inits(&g, &a, &cfg.solver, &[run_seed(seed, 0)])
    })?;
    let max_abs_diff: Vec<f64> = runs.iter().map(|c| c.max_abs_diff).collect();
    let mean_abs_diff: Vec<f64> = runs.iter().map(|c| c.mean_abs_diff).collect();
    Ok(UniquenessSummary {
        model,
        n,
        worst: max_abs_diff.iter().copied().fold(0.0, f64::max),
        average: mean_or_nan(&mean_abs_diff),
        max_abs_diff,
        mean_abs_diff,
    })
}

// ---------------------------------------------------------------------------
// Local polarity

#[derive(Debug, Clone, Serialize)]
pub struct LocalBucket {
    pub bucket: usize,
    /// Sample sizes for V1, V2, V3.
    pub counts: [usize; 3],
    pub dc_mean: [f64; 3],
    pub rnhb_mean: [f64; 3],
    /// Balanced (V2) minus polarised (V1 and V3) mean.
    pub dc_diff: f64,
    pub rnhb_diff: f64,
    pub dc_test: Option<TTestResult>,
    pub rnhb_test: Option<TTestResult>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LocalPolaritySummary {
    pub params: LocalPolarityParams,
    pub runs: usize,
    pub buckets: Vec<LocalBucket>,
    pub dc_significant_buckets: usize,
    pub rnhb_significant_buckets: usize,
}

/// Pools nodes of every run into PageRank buckets (computed per run over
/// V1 ∪ V2 ∪ V3) and compares balanced against polarised nodes.
pub fn local_polarity(
    params: &LocalPolarityParams,
    cfg: &ExperimentConfig,
) -> Result<LocalPolaritySummary> {
    let runs = run_all(cfg.runs, cfg.seed, |seed| {
        let generated = change_local_polarity(params, seed)?;
        let g = generated.graph.patch_sinks();
        let a = &generated.affiliations;
        let (pr, _) = pagerank(&g, &cfg.solver)?;
        let (dc, _) = diverse_centrality(&g, a, &cfg.solver)?;
        let rnhb = reweight_neighbor_bias(&pr, &generated.graph, a)?;
        let mut analyzed = Vec::new();
        let mut group_of = Vec::new();
        for (gi, name) in ["V1", "V2", "V3"].iter().enumerate() {
            let nodes = generated.group(name).expect("generator names its groups");
            analyzed.extend_from_slice(nodes);
            group_of.extend(std::iter::repeat_n(gi, nodes.len()));
        }
        let buckets = bucketize(pr.as_slice(), &analyzed)?;
        Ok(buckets
            .iter()
            .zip(group_of)
            .map(|((node, bucket), group)| (bucket, group, dc[node], rnhb[node]))
            .collect::<Vec<_>>())
    })?;

    let mut dc = vec![[Vec::new(), Vec::new(), Vec::new()]; BUCKET_COUNT];
    let mut rnhb = vec![[Vec::new(), Vec::new(), Vec::new()]; BUCKET_COUNT];
    for (bucket, group, d, r) in runs.into_iter().flatten() {
        dc[bucket][group].push(d);
        rnhb[bucket][group].push(r);
    }
    let buckets: Vec<LocalBucket> = (0..BUCKET_COUNT)
        .map(|b| {
            let polarized = |xs: &[Vec<f64>; 3]| [xs[0].as_slice(), &xs[2]].concat();
            let (dc_pol, rnhb_pol) = (polarized(&dc[b]), polarized(&rnhb[b]));
            LocalBucket {
                bucket: b,
                counts: [dc[b][0].len(), dc[b][1].len(), dc[b][2].len()],
                dc_mean: [0, 1, 2].map(|g| mean_or_nan(&dc[b][g])),
                rnhb_mean: [0, 1, 2].map(|g| mean_or_nan(&rnhb[b][g])),
                dc_diff: mean_or_nan(&dc[b][1]) - mean_or_nan(&dc_pol),
                rnhb_diff: mean_or_nan(&rnhb[b][1]) - mean_or_nan(&rnhb_pol),
                dc_test: welch_or_none(&dc[b][1], &dc_pol),
                rnhb_test: welch_or_none(&rnhb[b][1], &rnhb_pol),
            }
        })
        .collect();
    let significant = |f: fn(&LocalBucket) -> Option<TTestResult>| {
        buckets
            .iter()
            .filter(|b| f(b).is_some_and(|t| t.significant(cfg.alpha)))
            .count()
    };
    Ok(LocalPolaritySummary {
        params: *params,
        runs: cfg.runs,
        dc_significant_buckets: significant(|b| b.dc_test),
        rnhb_significant_buckets: significant(|b| b.rnhb_test),
        buckets,
    })
}

// ---------------------------------------------------------------------------
// Neighbourhood polarity

#[derive(Debug, Clone, Serialize)]
pub struct NeighborhoodBucket {
    pub bucket: usize,
    /// Sample sizes for red, balanced and blue neighbourhoods.
    pub counts: [usize; 3],
    pub dc_mean: [f64; 3],
    /// Balanced minus polarised (red and blue) mean.
    pub dc_diff: f64,
    pub rnb_diff: f64,
    pub dc_test: Option<TTestResult>,
    pub rnb_test: Option<TTestResult>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NeighborhoodPolaritySummary {
    pub params: NeighborhoodPolarityParams,
    pub runs: usize,
    pub buckets: Vec<NeighborhoodBucket>,
    /// Share of V0 nodes classified as sitting in a balanced neighbourhood.
    pub balanced_fraction: f64,
    pub isolated_nodes: usize,
}

fn class_index(class: NeighborhoodClass) -> Option<usize> {
    match class {
        NeighborhoodClass::Red => Some(0),
        NeighborhoodClass::Balanced => Some(1),
        NeighborhoodClass::Blue => Some(2),
        NeighborhoodClass::Isolated => None,
    }
}

pub fn neighborhood_polarity(
    params: &NeighborhoodPolarityParams,
    cfg: &ExperimentConfig,
) -> Result<NeighborhoodPolaritySummary> {
    let runs = run_all(cfg.runs, cfg.seed, |seed| {
        let generated = change_neighborhood_polarity(params, seed)?;
        let g = generated.graph.patch_sinks();
        let a = &generated.affiliations;
        let (pr, _) = pagerank(&g, &cfg.solver)?;
        let (dc, _) = diverse_centrality(&g, a, &cfg.solver)?;
        let rnb = reweight_node_bias(&pr, a)?;
        let polarity = neighbor_polarity(&generated.graph, a)?;
        let v0 = generated.group("V0").expect("generator names its groups");
        let buckets = bucketize(pr.as_slice(), v0)?;
        Ok(buckets
            .iter()
            .map(|(node, bucket)| {
                let class = class_index(classify_neighborhood(&polarity, node));
                (bucket, class, dc[node], rnb[node])
            })
            .collect::<Vec<_>>())
    })?;

    let mut dc = vec![[Vec::new(), Vec::new(), Vec::new()]; BUCKET_COUNT];
    let mut rnb = vec![[Vec::new(), Vec::new(), Vec::new()]; BUCKET_COUNT];
    let mut isolated_nodes = 0;
    for (bucket, class, d, r) in runs.into_iter().flatten() {
        match class {
            Some(c) => {
                dc[bucket][c].push(d);
                rnb[bucket][c].push(r);
            }
            None => isolated_nodes += 1,
        }
    }
    let mut total = 0;
    let mut balanced = 0;
    let buckets = (0..BUCKET_COUNT)
        .map(|b| {
            let polarized = |xs: &[Vec<f64>; 3]| [xs[0].as_slice(), &xs[2]].concat();
            let (dc_pol, rnb_pol) = (polarized(&dc[b]), polarized(&rnb[b]));
            let counts = [dc[b][0].len(), dc[b][1].len(), dc[b][2].len()];
            total += counts.iter().sum::<usize>();
            balanced += counts[1];
            NeighborhoodBucket {
                bucket: b,
                counts,
                dc_mean: [0, 1, 2].map(|c| mean_or_nan(&dc[b][c])),
                dc_diff: mean_or_nan(&dc[b][1]) - mean_or_nan(&dc_pol),
                rnb_diff: mean_or_nan(&rnb[b][1]) - mean_or_nan(&rnb_pol),
                dc_test: welch_or_none(&dc[b][1], &dc_pol),
                rnb_test: welch_or_none(&rnb[b][1], &rnb_pol),
            }
        })
        .collect();
    Ok(NeighborhoodPolaritySummary {
        params: *params,
        runs: cfg.runs,
        buckets,
        balanced_fraction: balanced as f64 / total.max(1) as f64,
        isolated_nodes,
    })
}

// ---------------------------------------------------------------------------
// Nine clusters

#[derive(Debug, Clone, Serialize)]
pub struct NineClustersSummary {
    pub params: NineClustersParams,
    /// Per run: mean PageRank of B1, B2, B3.
    pub pagerank_means: Vec<[f64; 3]>,
    pub dc_means: Vec<[f64; 3]>,
    pub pagerank_average: [f64; 3],
    pub dc_average: [f64; 3],
    /// Share of runs with B1 < B2 < B3.
    pub pagerank_monotone_fraction: f64,
    pub dc_monotone_fraction: f64,
    /// `R/(R+B)` over all B-column nodes of all runs.
    pub b_ratio_mean: f64,
    pub b_ratio_sd: f64,
}

pub fn nine_clusters_experiment(
    params: &NineClustersParams,
    cfg: &ExperimentConfig,
) -> Result<NineClustersSummary> {
    let runs = run_all(cfg.runs, cfg.seed, |seed| {
        let generated = nine_clusters(params, seed)?;
        let g = generated.graph.patch_sinks();
        let a = &generated.affiliations;
        let (pr, _) = pagerank(&g, &cfg.solver)?;
        let (dc, _) = diverse_centrality(&g, a, &cfg.solver)?;
        let polarity = neighbor_polarity(&generated.graph, a)?;
        let mut pr_means = [0.0; 3];
        let mut dc_means = [0.0; 3];
        let mut ratios = Vec::new();
        for (row, name) in ["B1", "B2", "B3"].iter().enumerate() {
            let nodes = generated.group(name).expect("generator names its groups");
            let pick = |s: &[f64]| nodes.iter().map(|&i| s[i]).collect::<Vec<_>>();
            pr_means[row] = mean(&pick(pr.as_slice()));
            dc_means[row] = mean(&pick(dc.as_slice()));
            ratios.extend(nodes.iter().filter_map(|&i| polarity.red_fraction(i)));
        }
        Ok((pr_means, dc_means, ratios))
    })?;
    let monotone = |m: &[f64; 3]| m[0] < m[1] && m[1] < m[2];
    let average = |xs: &[[f64; 3]]| [0, 1, 2].map(|k| mean_or_nan(&xs.iter().map(|m| m[k]).collect::<Vec<_>>()));
    let pagerank_means: Vec<[f64; 3]> = runs.iter().map(|r| r.0).collect();
    let dc_means: Vec<[f64; 3]> = runs.iter().map(|r| r.1).collect();
    let ratios: Vec<f64> = runs.iter().flat_map(|r| r.2.iter().copied()).collect();
    let fraction = |xs: &[[f64; 3]]| xs.iter().filter(|m| monotone(m)).count() as f64 / xs.len().max(1) as f64;
    Ok(NineClustersSummary {
        params: *params,
        pagerank_average: average(&pagerank_means),
        dc_average: average(&dc_means),
        pagerank_monotone_fraction: fraction(&pagerank_means),
        dc_monotone_fraction: fraction(&dc_means),
        b_ratio_mean: mean_or_nan(&ratios),
        b_ratio_sd: if ratios.len() > 1 { variance(&ratios).sqrt() } else { f64::NAN },
        pagerank_means,
        dc_means,
    })
}

// ---------------------------------------------------------------------------
// Cut edges among top-ranked nodes

#[derive(Debug, Clone, Serialize)]
pub struct CutCurves {
    pub ks: Vec<usize>,
    pub dc: Vec<usize>,
    pub pagerank: Vec<usize>,
    pub dbc: Vec<usize>,
    pub component_nodes: usize,
    pub dropped_nodes: usize,
    pub cluster_sizes: [usize; 2],
}

impl CutCurves {
    /// Diverse Centrality's count is at least PageRank's and diverse
    /// betweenness' at every k.
    pub fn dc_dominates(&self) -> bool {
        (0..self.ks.len()).all(|i| self.dc[i] >= self.pagerank[i] && self.dc[i] >= self.dbc[i])
    }
}

/// Restricts to the largest connected component, splits it spectrally and
/// counts cut edges among the top `k` nodes of each ranking. `k` values above
/// the component size are skipped.
pub fn cut_curves(
    g: &Graph,
    a: &AffiliationMatrix,
    ks: &[usize],
    solver: &SolverConfig,
) -> Result<CutCurves> {
    let component = largest_component(g);
    if component.len() < 2 {
        return Err(Error::Disconnected);
    }
    let dropped_nodes = g.node_count() - component.len();
    if dropped_nodes > 0 {
        log::info!("dropped {dropped_nodes} nodes outside the largest component");
    }
    let sub = g.induced_subgraph(&component);
    let sub_a = a.select(&component);
    let patched = sub.patch_sinks();
    let (pr, _) = pagerank(&patched, solver)?;
    let (dc, _) = diverse_centrality(&patched, &sub_a, solver)?;
    let dbc = diverse_betweenness(&sub, &sub_a)?;
    let part = spectral_bipartition(&sub.symmetrize(), &Default::default())?;

    let n = sub.node_count();
    let kept: Vec<usize> = ks.iter().copied().filter(|&k| (1..=n).contains(&k)).collect();
    if kept.len() < ks.len() {
        log::warn!("skipping k values outside 1..={n}");
    }
    let curve = |scores: &[f64]| -> Result<Vec<usize>> {
        let order = rank_top_k(scores, n)?;
        Ok(kept.iter().map(|&k| cut_edges_topk(&sub, &part, &order[..k])).collect())
    };
    Ok(CutCurves {
        dc: curve(dc.as_slice())?,
        pagerank: curve(pr.as_slice())?,
        dbc: curve(dbc.as_slice())?,
        ks: kept,
        component_nodes: n,
        dropped_nodes,
        cluster_sizes: part.sizes(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct BridgingSummary {
    pub params: PlantedBlocksParams,
    pub runs: Vec<CutCurves>,
    pub dc_dominates: Vec<bool>,
    pub dominance_fraction: f64,
    pub mean_dc: Vec<f64>,
    pub mean_pagerank: Vec<f64>,
    pub mean_dbc: Vec<f64>,
}

/// Cut-edge curves on planted two-block graphs with balanced bridge nodes.
pub fn bridging(
    params: &PlantedBlocksParams,
    ks: &[usize],
    cfg: &ExperimentConfig,
) -> Result<BridgingSummary> {
    let runs = run_all(cfg.runs, cfg.seed, |seed| {
        let generated = planted_blocks(params, seed)?;
        cut_curves(&generated.graph, &generated.affiliations, ks, &cfg.solver)
    })?;
    let dc_dominates: Vec<bool> = runs.iter().map(CutCurves::dc_dominates).collect();
    let columns = runs.first().map_or(0, |r| r.ks.len());
    let mean_of = |f: fn(&CutCurves) -> &Vec<usize>| {
        (0..columns)
            .map(|i| runs.iter().map(|r| f(r)[i] as f64).sum::<f64>() / runs.len() as f64)
            .collect::<Vec<_>>()
    };
    Ok(BridgingSummary {
        params: *params,
        dominance_fraction: dc_dominates.iter().filter(|&&d| d).count() as f64
            / dc_dominates.len().max(1) as f64,
        mean_dc: mean_of(|r| &r.dc),
        mean_pagerank: mean_of(|r| &r.pagerank),
        mean_dbc: mean_of(|r| &r.dbc),
        dc_dominates,
        runs,
    })
}
