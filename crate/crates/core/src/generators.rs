//! Seeded random graph models.
//!
//! All models produce bidirected simple graphs (both directions of every
//! undirected edge, no self-loops) together with two-community affiliations.
//! Red weights are drawn from the open interval (0,1) and blue is `1 - r`.
//!
//! Each call draws from independent [`ChaCha8Rng`](crate::rng::ChaCha8Rng)
//! streams keyed by its seed: one for polarities, one for edges and one for
//! any node-set selection, so e.g. reassigning polarities never perturbs the
//! edge draw.

use rand::distributions::Open01;
use rand::seq::index;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{AffiliationMatrix, Graph};
use crate::rng::{self, ChaCha8Rng};
use crate::{Error, Result};

/// A generated graph, its affiliations and any named node sets the model
/// defines.
#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: Graph,
    pub affiliations: AffiliationMatrix,
    pub groups: Vec<(String, Vec<usize>)>,
}

impl Generated {
    fn new(n: usize, pairs: Vec<(usize, usize)>, red: &[f64]) -> Self {
        let mut out = vec![Vec::new(); n];
        for (a, b) in pairs {
            out[a].push(b);
            out[b].push(a);
        }
        Self {
            graph: Graph::from_adjacency(out),
            affiliations: AffiliationMatrix::from_red(red).expect("red weights lie in [0,1]"),
            groups: Vec::new(),
        }
    }

    pub fn group(&self, name: &str) -> Option<&[usize]> {
        self.groups
            .iter()
            .find(|(g, _)| g == name)
            .map(|(_, nodes)| nodes.as_slice())
    }

    /// Number of undirected edges.
    pub fn undirected_edge_count(&self) -> usize {
        self.graph.edge_count() / 2
    }
}

fn random_reds(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = rng::stream(seed, rng::POLARITY_STREAM);
    (0..n).map(|_| rng.sample(Open01)).collect()
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::BadParams(format!("{name} must lie in [0,1], got {p}")))
    }
}

fn check_nodes(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::BadParams("need at least one node".into()))
    } else {
        Ok(())
    }
}

/// Includes every unordered pair `i < j` independently with `prob(i, j)`.
fn bernoulli_pairs<F>(n: usize, rng: &mut ChaCha8Rng, prob: F) -> Vec<(usize, usize)>
where
    F: Fn(usize, usize) -> f64,
{
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = prob(i, j);
            if p > 0.0 && rng.gen::<f64>() < p {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Link probability of the polarity-attachment model, `(r_i r_j + b_i b_j) / 2`.
pub fn polarity_link_probability(r_i: f64, r_j: f64) -> f64 {
    0.5 * (r_i * r_j + (1.0 - r_i) * (1.0 - r_j))
}

/// Erdős–Rényi graph: each unordered pair is an edge with probability `e`.
pub fn fully_random(n: usize, e: f64, seed: u64) -> Result<Generated> {
    check_nodes(n)?;
    check_probability("edge probability", e)?;
    let red = random_reds(n, seed);
    let mut rng = rng::stream(seed, rng::GRAPH_STREAM);
    let pairs = bernoulli_pairs(n, &mut rng, |_, _| e);
    Ok(Generated::new(n, pairs, &red))
}

/// Barabási–Albert style growth from an `m`-clique. Each new node links to `m`
/// distinct existing nodes drawn proportionally to their degree as of the
/// start of its step; repeated draws are discarded.
pub fn preferential_attachment(n: usize, m: usize, seed: u64) -> Result<Generated> {
    check_nodes(n)?;
    if m == 0 || m > n {
        return Err(Error::BadParams(format!(
            "attachment count m = {m} must lie in 1..={n}"
        )));
    }
    let red = random_reds(n, seed);
    let mut rng = rng::stream(seed, rng::GRAPH_STREAM);
    let mut pairs = Vec::with_capacity(m * (m - 1) / 2 + (n - m) * m);
    // Every edge endpoint appears once, so a uniform pick is degree-proportional.
    let mut endpoints: Vec<usize> = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            pairs.push((i, j));
            endpoints.extend([i, j]);
        }
    }
    let mut chosen = Vec::with_capacity(m);
    for node in m..n {
        let snapshot = endpoints.len();
        chosen.clear();
        while chosen.len() < m {
            let target = if snapshot == 0 {
                rng.gen_range(0..node)
            } else {
                endpoints[rng.gen_range(0..snapshot)]
            };
            if !chosen.contains(&target) {
                chosen.push(target);
            }
        }
        for &target in &chosen {
            pairs.push((target, node));
            endpoints.extend([target, node]);
        }
    }
    Ok(Generated::new(n, pairs, &red))
}

/// Pairs link with probability `(r_i r_j + b_i b_j) / 2`, so like-minded nodes
/// cluster.
pub fn polarity_attachment(n: usize, seed: u64) -> Result<Generated> {
    check_nodes(n)?;
    let red = random_reds(n, seed);
    Ok(polarity_attachment_with_reds(red, seed))
}

fn polarity_attachment_with_reds(red: Vec<f64>, seed: u64) -> Generated {
    let mut rng = rng::stream(seed, rng::GRAPH_STREAM);
    let pairs = bernoulli_pairs(red.len(), &mut rng, |i, j| {
        polarity_link_probability(red[i], red[j])
    });
    Generated::new(red.len(), pairs, &red)
}

/// Fully-random base graph in which three random node sets get fixed
/// polarities: `v1` nodes red-polarised, `v2` balanced, `v3` blue-polarised.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LocalPolarityParams {
    pub n: usize,
    pub e: f64,
    pub v1: usize,
    pub v2: usize,
    pub v3: usize,
    pub polarized_red: f64,
}

impl Default for LocalPolarityParams {
    fn default() -> Self {
        Self {
            n: 2000,
            e: 0.2,
            v1: 150,
            v2: 300,
            v3: 150,
            polarized_red: 0.99,
        }
    }
}

/// Groups `V1`, `V2`, `V3`.
pub fn change_local_polarity(params: &LocalPolarityParams, seed: u64) -> Result<Generated> {
    let LocalPolarityParams { n, e, v1, v2, v3, polarized_red } = *params;
    let chosen = v1 + v2 + v3;
    if chosen > n {
        return Err(Error::BadParams(format!("{chosen} reassigned nodes exceed n = {n}")));
    }
    check_probability("polarised red weight", polarized_red)?;
    let base = fully_random(n, e, seed)?;
    let mut red = base.affiliations.reds();
    let mut rng = rng::stream(seed, rng::SELECTION_STREAM);
    let picked = index::sample(&mut rng, n, chosen).into_vec();
    let (set1, rest) = picked.split_at(v1);
    let (set2, set3) = rest.split_at(v2);
    for &i in set1 {
        red[i] = polarized_red;
    }
    for &i in set2 {
        red[i] = 0.5;
    }
    for &i in set3 {
        red[i] = 1.0 - polarized_red;
    }
    let sorted = |s: &[usize]| {
        let mut v = s.to_vec();
        v.sort_unstable();
        v
    };
    Ok(Generated {
        affiliations: AffiliationMatrix::from_red(&red)?,
        groups: vec![
            ("V1".into(), sorted(set1)),
            ("V2".into(), sorted(set2)),
            ("V3".into(), sorted(set3)),
        ],
        graph: base.graph,
    })
}

/// Polarity-attachment base graph after which `balanced` random nodes are
/// reset to `r = b = 0.5`. The edges keep the structure induced by the
/// original polarities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NeighborhoodPolarityParams {
    pub n: usize,
    pub balanced: usize,
}

impl Default for NeighborhoodPolarityParams {
    fn default() -> Self {
        Self { n: 2000, balanced: 600 }
    }
}

/// Group `V0`.
pub fn change_neighborhood_polarity(
    params: &NeighborhoodPolarityParams,
    seed: u64,
) -> Result<Generated> {
    let NeighborhoodPolarityParams { n, balanced } = *params;
    if balanced > n {
        return Err(Error::BadParams(format!("{balanced} reassigned nodes exceed n = {n}")));
    }
    let base = polarity_attachment(n, seed)?;
    let mut red = base.affiliations.reds();
    let mut rng = rng::stream(seed, rng::SELECTION_STREAM);
    let mut v0 = index::sample(&mut rng, n, balanced).into_vec();
    v0.sort_unstable();
    for &i in &v0 {
        red[i] = 0.5;
    }
    Ok(Generated {
        graph: base.graph,
        affiliations: AffiliationMatrix::from_red(&red)?,
        groups: vec![("V0".into(), v0)],
    })
}

/// Three rows of three clusters `A_k, B_k, C_k`. Row `k` clusters all have
/// `row_sizes[k]` nodes. Edges join `A_k-B_k`, `B_k-C_k`, `B_1-B_2` and
/// `B_2-B_3`; B-column nodes are balanced.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NineClustersParams {
    pub row_sizes: [usize; 3],
    pub intra: f64,
    pub adjacent: f64,
}

impl Default for NineClustersParams {
    fn default() -> Self {
        Self {
            row_sizes: [50, 150, 450],
            intra: 0.5,
            adjacent: 0.1,
        }
    }
}

pub const NINE_CLUSTER_NAMES: [&str; 9] = ["A1", "B1", "C1", "A2", "B2", "C2", "A3", "B3", "C3"];

/// Whether clusters `a` and `b` (indices into [`NINE_CLUSTER_NAMES`]) are
/// joined.
pub fn nine_clusters_adjacent(a: usize, b: usize) -> bool {
    let (lo, hi) = (a.min(b), a.max(b));
    let (row_lo, col_lo) = (lo / 3, lo % 3);
    let (row_hi, col_hi) = (hi / 3, hi % 3);
    if row_lo == row_hi {
        col_hi - col_lo == 1
    } else {
        col_lo == 1 && col_hi == 1 && row_hi - row_lo == 1
    }
}

/// Groups named after [`NINE_CLUSTER_NAMES`].
pub fn nine_clusters(params: &NineClustersParams, seed: u64) -> Result<Generated> {
    check_probability("intra-cluster probability", params.intra)?;
    check_probability("adjacent-cluster probability", params.adjacent)?;
    let mut cluster_of = Vec::new();
    for (c, _) in NINE_CLUSTER_NAMES.iter().enumerate() {
        cluster_of.extend(std::iter::repeat_n(c, params.row_sizes[c / 3]));
    }
    let n = cluster_of.len();
    check_nodes(n)?;
    let mut red = random_reds(n, seed);
    for (r, &c) in red.iter_mut().zip(&cluster_of) {
        if c % 3 == 1 {
            *r = 0.5;
        }
    }
    let mut rng = rng::stream(seed, rng::GRAPH_STREAM);
    let pairs = bernoulli_pairs(n, &mut rng, |i, j| {
        let (a, b) = (cluster_of[i], cluster_of[j]);
        if a == b {
            params.intra
        } else if nine_clusters_adjacent(a, b) {
            params.adjacent
        } else {
            0.0
        }
    });
    let mut generated = Generated::new(n, pairs, &red);
    generated.groups = NINE_CLUSTER_NAMES
        .iter()
        .enumerate()
        .map(|(c, name)| {
            let nodes = (0..n).filter(|&i| cluster_of[i] == c).collect();
            (name.to_string(), nodes)
        })
        .collect();
    Ok(generated)
}

/// Two polarised blocks plus balanced bridge nodes, linked by the
/// polarity-attachment rule.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlantedBlocksParams {
    pub block_size: usize,
    pub bridges: usize,
    /// Red weight of the blue-leaning block; the other block gets `1 - low`.
    pub low_red: f64,
}

impl Default for PlantedBlocksParams {
    fn default() -> Self {
        Self {
            block_size: 285,
            bridges: 30,
            low_red: 0.05,
        }
    }
}

/// Groups `blue`, `red` and `bridges`, laid out in that order.
pub fn planted_blocks(params: &PlantedBlocksParams, seed: u64) -> Result<Generated> {
    check_probability("block red weight", params.low_red)?;
    let PlantedBlocksParams { block_size, bridges, low_red } = *params;
    let n = 2 * block_size + bridges;
    check_nodes(n)?;
    let red: Vec<f64> = std::iter::repeat_n(low_red, block_size)
        .chain(std::iter::repeat_n(1.0 - low_red, block_size))
        .chain(std::iter::repeat_n(0.5, bridges))
        .collect();
    let mut generated = polarity_attachment_with_reds(red, seed);
    generated.groups = vec![
        ("blue".into(), (0..block_size).collect()),
        ("red".into(), (block_size..2 * block_size).collect()),
        ("bridges".into(), (2 * block_size..n).collect()),
    ];
    Ok(generated)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Model {
    FullyRandom,
    PreferentialAttachment,
    PolarityAttachment,
    ChangeLocal,
    ChangeNeighborhood,
    NineClusters,
}

impl Model {
    pub const BASIC: [Model; 3] = [
        Model::FullyRandom,
        Model::PreferentialAttachment,
        Model::PolarityAttachment,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Model::FullyRandom => "fully-random",
            Model::PreferentialAttachment => "preferential-attachment",
            Model::PolarityAttachment => "polarity-attachment",
            Model::ChangeLocal => "change-local",
            Model::ChangeNeighborhood => "change-neighborhood",
            Model::NineClusters => "nine-clusters",
        }
    }
}

/// Model choice with its scalar parameters. `n`, `e` and `m` are ignored by
/// models whose sizes are fixed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub model: Model,
    pub n: usize,
    pub e: f64,
    pub m: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(model: Model, seed: u64) -> Self {
        Self {
            model,
            n: 1000,
            e: 0.2,
            m: 20,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_nodes(self.n)?;
        check_probability("edge probability", self.e)?;
        if self.model == Model::PreferentialAttachment && (self.m == 0 || self.m > self.n) {
            return Err(Error::BadParams(format!(
                "attachment count m = {} must lie in 1..={}",
                self.m, self.n
            )));
        }
        Ok(())
    }

    pub fn generate(&self) -> Result<Generated> {
        self.validate()?;
        match self.model {
            Model::FullyRandom => fully_random(self.n, self.e, self.seed),
            Model::PreferentialAttachment => preferential_attachment(self.n, self.m, self.seed),
            Model::PolarityAttachment => polarity_attachment(self.n, self.seed),
            Model::ChangeLocal => change_local_polarity(&Default::default(), self.seed),
            Model::ChangeNeighborhood => {
                change_neighborhood_polarity(&Default::default(), self.seed)
            }
            Model::NineClusters => nine_clusters(&Default::default(), self.seed),
        }
    }
}
