//! Command definitions and their implementations.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use divcent::analysis::{rank_top_k, BUCKET_COUNT};
use divcent::betweenness::{betweenness, diverse_betweenness};
use divcent::centrality::{
    diverse_centrality, pagerank, reweight_neighbor_bias, reweight_node_bias, Aggregator,
    SolverConfig, SolverReport,
};
use divcent::generators::{
    GenSpec, LocalPolarityParams, Model, NeighborhoodPolarityParams, NineClustersParams,
    PlantedBlocksParams,
};
use divcent::io::{self, AffiliationMode};
use divcent::{AffiliationMatrix, Graph};
use serde::Serialize;

use crate::error::CliError;
use crate::experiments::{self, ExperimentConfig};
use crate::svg::{self, Series};
use crate::REPORT_SCHEMA_VERSION;

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "divcent", version, about = "Diverse Centrality and related graph rankings")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Damping factor p.
    #[arg(long, global = true, default_value_t = 0.85)]
    pub damping: f64,
    /// L1 convergence threshold between successive iterates.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub epsilon: f64,
    /// Aggregation applied to each node's per-community mass.
    #[arg(long = "f", global = true, value_enum, default_value_t = AggregatorArg::Min)]
    pub aggregator: AggregatorArg,
    #[arg(long, global = true, default_value_t = 10_000)]
    pub max_iters: usize,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Independent runs per experiment.
    #[arg(long, global = true, default_value_t = 50)]
    pub runs: usize,
    /// Significance level for Welch tests.
    #[arg(long, global = true, default_value_t = 0.05)]
    pub alpha: f64,
    /// Output directory, or the CSV path for `rank` (stdout when omitted).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl GlobalOpts {
    pub fn solver(&self) -> SolverConfig {
        SolverConfig {
            damping: self.damping,
            epsilon: self.epsilon,
            aggregator: self.aggregator.into(),
            max_iters: self.max_iters,
            ..SolverConfig::default()
        }
    }

    pub fn experiment(&self) -> ExperimentConfig {
        ExperimentConfig {
            runs: self.runs,
            seed: self.seed,
            solver: self.solver(),
            alpha: self.alpha,
        }
    }

    fn out_dir(&self) -> Result<PathBuf> {
        let dir = self.out.clone().unwrap_or_else(|| PathBuf::from("."));
        std::fs::create_dir_all(&dir).map_err(|source| file_error(&dir, source))?;
        Ok(dir)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AggregatorArg {
    Min,
    Geomean,
}

impl From<AggregatorArg> for Aggregator {
    fn from(a: AggregatorArg) -> Self {
        match a {
            AggregatorArg::Min => Aggregator::Minimum,
            AggregatorArg::Geomean => Aggregator::GeometricMean,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    FullyRandom,
    PreferentialAttachment,
    PolarityAttachment,
    ChangeLocal,
    ChangeNeighborhood,
    NineClusters,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::FullyRandom => Model::FullyRandom,
            ModelArg::PreferentialAttachment => Model::PreferentialAttachment,
            ModelArg::PolarityAttachment => Model::PolarityAttachment,
            ModelArg::ChangeLocal => Model::ChangeLocal,
            ModelArg::ChangeNeighborhood => Model::ChangeNeighborhood,
            ModelArg::NineClusters => Model::NineClusters,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Dc,
    Pagerank,
    Rnb,
    Rnhb,
    Bc,
    Dbc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExperimentName {
    Convergence,
    Uniqueness,
    LocalPolarity,
    NeighborhoodPolarity,
    NineClusters,
    Bridging,
}

#[derive(Debug, Clone, Args)]
pub struct InputOpts {
    /// Edge list, one `source,target` pair per line.
    #[arg(long)]
    pub graph: PathBuf,
    /// Affiliation file.
    #[arg(long)]
    pub affiliations: Option<PathBuf>,
    /// Read affiliations as `node,v` with v in [-1,1].
    #[arg(long)]
    pub scalar: bool,
    /// Number of communities in vector-mode affiliation files.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Draw a random graph and write its edge list and affiliations.
    Generate {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long, default_value_t = 1000)]
        n: usize,
        /// Edge probability for the fully random model.
        #[arg(long, default_value_t = 0.2)]
        e: f64,
        /// Attachment count for preferential attachment.
        #[arg(long, default_value_t = 20)]
        m: usize,
    },
    /// Score and rank every node of a graph.
    Rank {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long, value_enum)]
        algorithm: Algorithm,
        /// Fail on sink nodes instead of linking them to every node.
        #[arg(long)]
        no_patch_sinks: bool,
    },
    /// Run one of the built-in experiments.
    Experiment {
        #[arg(value_enum)]
        name: ExperimentName,
        /// Graph model for the convergence and uniqueness experiments.
        #[arg(long, value_enum, default_value_t = ModelArg::FullyRandom)]
        model: ModelArg,
        /// Node count for the convergence and uniqueness experiments.
        #[arg(long, default_value_t = 1000)]
        n: usize,
        /// Top-k grid for the bridging experiment.
        #[arg(long, value_delimiter = ',', default_value = "10,20,30,40,50,60,70,80,90,100")]
        ks: Vec<usize>,
    },
    /// Count cut edges among the top-ranked nodes of DC, PageRank and DBC.
    CutAnalysis {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long, value_delimiter = ',', default_value = "10,20,30,40,50,60,70,80,90,100")]
        ks: Vec<usize>,
    },
    /// Print the version.
    Version,
}

fn file_error(path: &Path, source: std::io::Error) -> CliError {
    CliError::File {
        path: path.display().to_string(),
        source,
    }
}

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|source| file_error(path, source))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|source| file_error(path, source))
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| file_error(path, source))?;
    log::info!("wrote {}", path.display());
    Ok(())
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    write_file(path, &text)
}

/// Loads the graph and, when given, the affiliations. The node count is the
/// larger of the edge list's and the affiliation file's.
pub fn load_inputs(input: &InputOpts) -> Result<(Graph, Option<AffiliationMatrix>)> {
    let edges = io::load_edge_list(open(&input.graph)?)?;
    let affil_lines = match &input.affiliations {
        Some(path) => io::count_data_lines(open(path)?)?,
        None => 0,
    };
    let (graph, duplicates) = edges.into_graph(affil_lines)?;
    if duplicates > 0 {
        log::warn!("dropped {duplicates} duplicate edges");
    }
    let affiliations = match &input.affiliations {
        Some(path) => {
            let mode = if input.scalar {
                AffiliationMode::Scalar
            } else {
                AffiliationMode::Vector { k: input.k }
            };
            Some(io::load_affiliations(open(path)?, graph.node_count(), mode)?)
        }
        None => None,
    };
    Ok((graph, affiliations))
}

fn require_affiliations(a: Option<AffiliationMatrix>) -> Result<AffiliationMatrix> {
    a.ok_or_else(|| CliError::Usage("this command needs --affiliations".into()))
}

pub fn run(cli: Cli) -> Result<()> {
    let global = &cli.global;
    global.solver().validate()?;
    match cli.command {
        Command::Generate { model, n, e, m } => generate(global, model.into(), n, e, m),
        Command::Rank {
            input,
            algorithm,
            no_patch_sinks,
        } => rank(global, &input, algorithm, no_patch_sinks),
        Command::Experiment { name, model, n, ks } => experiment(global, name, model.into(), n, &ks),
        Command::CutAnalysis { input, ks } => cut_analysis(global, &input, &ks),
        Command::Version => {
            println!("divcent {}", env!("CARGO_PKG_VERSION"));
            Ok(())
        }
    }
}

pub fn generate(global: &GlobalOpts, model: Model, n: usize, e: f64, m: usize) -> Result<()> {
    let spec = GenSpec {
        model,
        n,
        e,
        m,
        seed: global.seed,
    };
    let generated = spec.generate()?;
    let dir = global.out_dir()?;
    let stem = format!("{}-{}", model.name(), global.seed);
    let edges_path = dir.join(format!("{stem}.edges.csv"));
    let affil_path = dir.join(format!("{stem}.affiliations.csv"));
    let mut w = create(&edges_path)?;
    io::write_edge_list(&generated.graph, &mut w)?;
    w.flush()?;
    let mut w = create(&affil_path)?;
    io::write_affiliations(&generated.affiliations, &mut w)?;
    w.flush()?;
    println!(
        "model={} n={} edges={} seed={}",
        model.name(),
        generated.graph.node_count(),
        generated.graph.edge_count(),
        global.seed
    );
    println!("{}", edges_path.display());
    println!("{}", affil_path.display());
    Ok(())
}

#[derive(Debug, Serialize)]
struct RankSidecar<'a> {
    schema_version: u32,
    algorithm: &'a str,
    nodes: usize,
    sinks_patched: usize,
    solver: Option<SolverConfig>,
    report: Option<SolverReport>,
}

fn algorithm_name(a: Algorithm) -> &'static str {
    match a {
        Algorithm::Dc => "dc",
        Algorithm::Pagerank => "pagerank",
        Algorithm::Rnb => "rnb",
        Algorithm::Rnhb => "rnhb",
        Algorithm::Bc => "bc",
        Algorithm::Dbc => "dbc",
    }
}

/// Scores for one algorithm, with the solver report for iterative ones and
/// the number of sinks patched.
pub fn score(
    graph: &Graph,
    affiliations: Option<AffiliationMatrix>,
    algorithm: Algorithm,
    solver: &SolverConfig,
    patch_sinks: bool,
) -> Result<(Vec<f64>, Option<SolverReport>, usize)> {
    let sinks = graph.sinks().count();
    let iterative = !matches!(algorithm, Algorithm::Bc | Algorithm::Dbc);
    let patched;
    let patch = iterative && sinks > 0 && patch_sinks;
    let g = if patch {
        log::info!("linking {sinks} sink nodes to every node");
        patched = graph.patch_sinks();
        &patched
    } else {
        graph
    };
    let out = match algorithm {
        Algorithm::Bc => (betweenness(g).0, None),
        Algorithm::Dbc => {
            let a = require_affiliations(affiliations)?;
            (diverse_betweenness(g, &a)?.0, None)
        }
        Algorithm::Pagerank => {
            let (s, r) = pagerank(g, solver)?;
            (s.into_inner(), Some(r))
        }
        Algorithm::Dc => {
            let a = require_affiliations(affiliations)?;
            let (s, r) = diverse_centrality(g, &a, solver)?;
            (s.into_inner(), Some(r))
        }
        Algorithm::Rnb => {
            let a = require_affiliations(affiliations)?;
            a.require_two()?;
            let (s, r) = pagerank(g, solver)?;
            (reweight_node_bias(&s, &a)?.into_inner(), Some(r))
        }
        Algorithm::Rnhb => {
            let a = require_affiliations(affiliations)?;
            a.require_two()?;
            let (s, r) = pagerank(g, solver)?;
            (reweight_neighbor_bias(&s, graph, &a)?.into_inner(), Some(r))
        }
    };
    Ok((out.0, out.1, if patch { sinks } else { 0 }))
}

pub fn rank(global: &GlobalOpts, input: &InputOpts, algorithm: Algorithm, no_patch_sinks: bool) -> Result<()> {
    let (graph, affiliations) = load_inputs(input)?;
    let solver = global.solver();
    let (scores, report, sinks_patched) = score(&graph, affiliations, algorithm, &solver, !no_patch_sinks)?;
    let order = rank_top_k(&scores, scores.len())?;
    let mut csv = String::from("node,score,rank\n");
    for (rank, &node) in order.iter().enumerate() {
        csv.push_str(&format!("{node},{:e},{}\n", scores[node], rank + 1));
    }
    match &global.out {
        Some(path) => {
            write_file(path, &csv)?;
            let sidecar = RankSidecar {
                schema_version: REPORT_SCHEMA_VERSION,
                algorithm: algorithm_name(algorithm),
                nodes: graph.node_count(),
                sinks_patched,
                solver: report.as_ref().map(|_| solver),
                report,
            };
            write_json(&path.with_extension("json"), &sidecar)?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(csv.as_bytes())?;
            lock.flush()?;
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct ConfigEcho {
    seed: u64,
    runs: usize,
    alpha: f64,
    solver: SolverConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    model: Option<Model>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
}

#[derive(Debug, Serialize)]
struct Report<'a, T: Serialize> {
    schema_version: u32,
    experiment: &'a str,
    config: ConfigEcho,
    result: T,
}

/// Wall-clock phases, kept apart from the report so reports stay reproducible.
#[derive(Debug, Default, Serialize)]
struct Timings {
    phases: Vec<(String, f64)>,
}

impl Timings {
    fn time<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.phases.push((phase.to_owned(), start.elapsed().as_secs_f64()));
        out
    }
}

fn bucket_labels() -> Vec<String> {
    (0..BUCKET_COUNT).map(|b| format!("b{}", b + 1)).collect()
}

fn csv_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:e}")
    } else {
        String::new()
    }
}

fn csv_test(t: Option<divcent::analysis::TTestResult>) -> String {
    match t {
        Some(t) => format!("{},{}", csv_f64(t.t), csv_f64(t.p_value)),
        None => ",".into(),
    }
}

pub fn experiment(
    global: &GlobalOpts,
    name: ExperimentName,
    model: Model,
    n: usize,
    ks: &[usize],
) -> Result<()> {
    if global.runs == 0 {
        return Err(CliError::Usage("--runs must be at least 1".into()));
    }
    let cfg = global.experiment();
    let dir = global.out_dir()?;
    let mut timings = Timings::default();
    let echo = |model: Option<Model>, n: Option<usize>| ConfigEcho {
        seed: cfg.seed,
        runs: cfg.runs,
        alpha: cfg.alpha,
        solver: cfg.solver,
        model,
        n,
    };
    let (id, json, csv, chart) = match name {
        ExperimentName::Convergence => {
            let r = timings.time("runs", || experiments::convergence(model, n, &cfg))?;
            let mut csv = String::from("run,pagerank_iterations,dc_iterations,dc_converged\n");
            for i in 0..r.dc_iterations.len() {
                csv.push_str(&format!(
                    "{},{},{},{}\n",
                    i, r.pagerank_iterations[i], r.dc_iterations[i], r.dc_converged[i]
                ));
            }
            let chart = svg::histogram(
                &format!("Iterations to convergence ({})", model.name()),
                "iterations",
                &[("PageRank", &r.pagerank_iterations), ("Diverse Centrality", &r.dc_iterations)],
            );
            let json = report_json("convergence", echo(Some(model), Some(n)), &r)?;
            ("convergence", json, csv, chart)
        }
        ExperimentName::Uniqueness => {
            let r = timings.time("runs", || experiments::uniqueness(model, n, &cfg))?;
            let mut csv = String::from("run,max_abs_diff,mean_abs_diff\n");
            for i in 0..r.max_abs_diff.len() {
                csv.push_str(&format!("{},{},{}\n", i, csv_f64(r.max_abs_diff[i]), csv_f64(r.mean_abs_diff[i])));
            }
            let chart = svg::bar_chart(
                &format!("Uniform versus random start ({})", model.name()),
                "run",
                "max |difference|",
                &(0..r.max_abs_diff.len()).map(|i| i.to_string()).collect::<Vec<_>>(),
                &[Series { name: "max", values: r.max_abs_diff.clone() }],
            );
            let json = report_json("uniqueness", echo(Some(model), Some(n)), &r)?;
            ("uniqueness", json, csv, chart)
        }
        ExperimentName::LocalPolarity => {
            let r = timings.time("runs", || experiments::local_polarity(&LocalPolarityParams::default(), &cfg))?;
            let mut csv = String::from(
                "bucket,n_v1,n_v2,n_v3,dc_v1,dc_v2,dc_v3,dc_t,dc_p,rnhb_v1,rnhb_v2,rnhb_v3,rnhb_t,rnhb_p\n",
            );
            for b in &r.buckets {
                csv.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{},{}\n",
                    b.bucket + 1,
                    b.counts[0],
                    b.counts[1],
                    b.counts[2],
                    csv_f64(b.dc_mean[0]),
                    csv_f64(b.dc_mean[1]),
                    csv_f64(b.dc_mean[2]),
                    csv_test(b.dc_test),
                    csv_f64(b.rnhb_mean[0]),
                    csv_f64(b.rnhb_mean[1]),
                    csv_f64(b.rnhb_mean[2]),
                    csv_test(b.rnhb_test),
                ));
            }
            let group = |g: usize, name: &'static str| Series {
                name,
                values: r.buckets.iter().map(|b| b.dc_mean[g]).collect(),
            };
            let chart = svg::bar_chart(
                "Diverse Centrality by PageRank bucket",
                "PageRank bucket",
                "mean score",
                &bucket_labels(),
                &[group(0, "V1 (red)"), group(1, "V2 (balanced)"), group(2, "V3 (blue)")],
            );
            let json = report_json("local-polarity", echo(None, None), &r)?;
            ("local-polarity", json, csv, chart)
        }
        ExperimentName::NeighborhoodPolarity => {
            let r = timings.time("runs", || {
                experiments::neighborhood_polarity(&NeighborhoodPolarityParams::default(), &cfg)
            })?;
            let mut csv =
                String::from("bucket,n_red,n_balanced,n_blue,dc_red,dc_balanced,dc_blue,dc_diff,dc_t,dc_p,rnb_diff,rnb_t,rnb_p\n");
            for b in &r.buckets {
                csv.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{}\n",
                    b.bucket + 1,
                    b.counts[0],
                    b.counts[1],
                    b.counts[2],
                    csv_f64(b.dc_mean[0]),
                    csv_f64(b.dc_mean[1]),
                    csv_f64(b.dc_mean[2]),
                    csv_f64(b.dc_diff),
                    csv_test(b.dc_test),
                    csv_f64(b.rnb_diff),
                    csv_test(b.rnb_test),
                ));
            }
            let group = |g: usize, name: &'static str| Series {
                name,
                values: r.buckets.iter().map(|b| b.dc_mean[g]).collect(),
            };
            let chart = svg::bar_chart(
                "Diverse Centrality by neighbourhood polarity",
                "PageRank bucket",
                "mean score",
                &bucket_labels(),
                &[group(0, "red"), group(1, "balanced"), group(2, "blue")],
            );
            let json = report_json("neighborhood-polarity", echo(None, None), &r)?;
            ("neighborhood-polarity", json, csv, chart)
        }
        ExperimentName::NineClusters => {
            let r = timings.time("runs", || {
                experiments::nine_clusters_experiment(&NineClustersParams::default(), &cfg)
            })?;
            let mut csv = String::from("run,pr_b1,pr_b2,pr_b3,dc_b1,dc_b2,dc_b3\n");
            for (i, (p, d)) in r.pagerank_means.iter().zip(&r.dc_means).enumerate() {
                csv.push_str(&format!(
                    "{i},{},{},{},{},{},{}\n",
                    csv_f64(p[0]),
                    csv_f64(p[1]),
                    csv_f64(p[2]),
                    csv_f64(d[0]),
                    csv_f64(d[1]),
                    csv_f64(d[2])
                ));
            }
            let chart = svg::bar_chart(
                "Mean scores of the B clusters",
                "cluster",
                "mean score",
                &["B1".into(), "B2".into(), "B3".into()],
                &[
                    Series { name: "PageRank", values: r.pagerank_average.to_vec() },
                    Series { name: "Diverse Centrality", values: r.dc_average.to_vec() },
                ],
            );
            let json = report_json("nine-clusters", echo(None, None), &r)?;
            ("nine-clusters", json, csv, chart)
        }
        ExperimentName::Bridging => {
            let r = timings.time("runs", || experiments::bridging(&PlantedBlocksParams::default(), ks, &cfg))?;
            let kept = r.runs.first().map(|c| c.ks.clone()).unwrap_or_default();
            let mut csv = String::from("k,dc,pagerank,dbc\n");
            for (i, k) in kept.iter().enumerate() {
                csv.push_str(&format!(
                    "{k},{},{},{}\n",
                    csv_f64(r.mean_dc[i]),
                    csv_f64(r.mean_pagerank[i]),
                    csv_f64(r.mean_dbc[i])
                ));
            }
            let chart = cut_chart("Mean cut edges among top-k nodes", &kept, &r.mean_dc, &r.mean_pagerank, &r.mean_dbc);
            let json = report_json("bridging", echo(None, None), &r)?;
            ("bridging", json, csv, chart)
        }
    };
    write_file(&dir.join(format!("{id}.report.json")), &json)?;
    write_file(&dir.join(format!("{id}.csv")), &csv)?;
    write_file(&dir.join(format!("{id}.svg")), &chart)?;
    write_json(&dir.join(format!("{id}.timings.json")), &timings)?;
    println!("{}", dir.join(format!("{id}.report.json")).display());
    Ok(())
}

fn report_json<T: Serialize>(experiment: &str, config: ConfigEcho, result: &T) -> Result<String> {
    let report = Report {
        schema_version: REPORT_SCHEMA_VERSION,
        experiment,
        config,
        result,
    };
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    Ok(text)
}

fn cut_chart(title: &str, ks: &[usize], dc: &[f64], pr: &[f64], dbc: &[f64]) -> String {
    let xs: Vec<f64> = ks.iter().map(|&k| k as f64).collect();
    svg::line_chart(
        title,
        "k",
        "cut edges",
        &xs,
        &[
            Series { name: "Diverse Centrality", values: dc.to_vec() },
            Series { name: "PageRank", values: pr.to_vec() },
            Series { name: "Diverse Betweenness", values: dbc.to_vec() },
        ],
    )
}

pub fn cut_analysis(global: &GlobalOpts, input: &InputOpts, ks: &[usize]) -> Result<()> {
    let (graph, affiliations) = load_inputs(input)?;
    let a = require_affiliations(affiliations)?;
    let curves = experiments::cut_curves(&graph, &a, ks, &global.solver())?;
    let dir = global.out_dir()?;
    let mut csv = String::from("k,dc,pagerank,dbc\n");
    for i in 0..curves.ks.len() {
        csv.push_str(&format!(
            "{},{},{},{}\n",
            curves.ks[i], curves.dc[i], curves.pagerank[i], curves.dbc[i]
        ));
    }
    let as_f64 = |v: &[usize]| v.iter().map(|&x| x as f64).collect::<Vec<_>>();
    let chart = cut_chart(
        "Cut edges among top-k nodes",
        &curves.ks,
        &as_f64(&curves.dc),
        &as_f64(&curves.pagerank),
        &as_f64(&curves.dbc),
    );
    write_file(&dir.join("cut_edges.csv"), &csv)?;
    write_file(&dir.join("cut_edges.svg"), &chart)?;
    let json = report_json("cut-analysis", ConfigEcho {
        seed: global.seed,
        runs: 1,
        alpha: global.alpha,
        solver: global.solver(),
        model: None,
        n: Some(graph.node_count()),
    }, &curves)?;
    write_file(&dir.join("cut_edges.report.json"), &json)?;
    print!("{csv}");
    Ok(())
}
