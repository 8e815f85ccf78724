//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on a usage error, 2 on a data error. Data
//! goes to `--out`, to `$P2PTOPO_OUT_DIR/<default name>`, or to stdout, in
//! that order of preference; diagnostics always go to stderr.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::correlation::{degree_ccdf, knn_by_degree};
use crate::edgelist::{parse_edge_list, serialize_edge_list};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kcore::{core_numbers, split_with};
use crate::netgen::{
    generate, SyntheticConfig, CALIBRATED_BIAS, CALIBRATED_RELAY_FRACTION, CALIBRATED_RELAY_LINKS,
    DEFAULT_DOUT, DEFAULT_NODES, DEFAULT_SUPERS,
};
use crate::render::{
    knn_plot, matrix_plot, scatter_ksn_plot, MatrixPlotSpec, DEFAULT_MAX_RENDERABLE,
    DEFAULT_REFERENCE_X,
};
use crate::report::{
    analysis_report, assortativity_json, kcore_json, knn_csv, round_sig9, to_json,
    AnalysisParams, RemovalJson, SuperPeerSection, DEFAULT_TOP_N,
};
use crate::superpeer::{
    profile_csv, removal_robustness, shared_neighbor_overlap, superpeer_coverage,
    superpeer_degree_profile, top_degree_nodes,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "p2ptopo",
    version,
    about = "Core-periphery analysis of peer-to-peer overlay graphs",
    long_about = "Core-periphery analysis of peer-to-peer overlay graphs.\n\n\
        Input graphs are whitespace-separated edge lists (one `u v` pair per line, \
        `#` comments). Pass `-` as the input path to read stdin.\n\n\
        Exit status: 0 success, 1 usage error, 2 data error."
)]
struct Cli {
    /// Upper bound on worker threads for the analysis passes (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// Directory for outputs when --out is not given (otherwise stdout).
    #[arg(long, global = true, env = "P2PTOPO_OUT_DIR", value_name = "DIR")]
    out_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate and normalize an edge list (dedupe, drop self-loops, sort).
    Ingest(IngestArgs),
    /// Full JSON report: k-core, degree correlation, super-peers, robustness.
    Analyze(AnalyzeArgs),
    /// k-core decomposition as JSON.
    Kcore(KcoreArgs),
    /// K_nn(k) table as CSV, or the assortativity block as JSON.
    Knn(KnnArgs),
    /// Super-peer coverage, neighbor overlap and per-node profile.
    Superpeers(SuperpeersArgs),
    /// Component statistics before and after removing nodes.
    Robustness(RobustnessArgs),
    /// Generate a synthetic hub-dominated topology.
    Gen(GenArgs),
    /// Render a figure as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Edge-list file, or `-` for stdin.
    #[arg(long, short, value_name = "PATH")]
    input: PathBuf,

    /// Restrict the analysis to the largest connected component.
    #[arg(long)]
    lcc: bool,
}

#[derive(Debug, Args)]
struct OutArg {
    /// Output file (default: $P2PTOPO_OUT_DIR/<name>, else stdout).
    #[arg(long, short, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CoreArg {
    /// Core threshold k (default: the maximum core index k_max).
    #[arg(long, allow_negative_numbers = true, value_name = "K")]
    k: Option<i64>,
}

#[derive(Debug, Args)]
struct TopNArg {
    /// Number of highest-degree nodes treated as super-peers.
    #[arg(long, default_value_t = DEFAULT_TOP_N, value_name = "S")]
    top_n: usize,
}

#[derive(Debug, Args)]
struct IngestArgs {
    /// Edge-list file, or `-` for stdin.
    #[arg(long, short, value_name = "PATH")]
    input: PathBuf,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    top_n: TopNArg,
    #[command(flatten)]
    core: CoreArg,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Debug, Args)]
struct KcoreArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Also list the labels of the k-core members (k from --k, else k_max).
    #[arg(long)]
    members: bool,
    #[command(flatten)]
    core: CoreArg,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KnnFormat {
    /// `k,n_k,knn_k` table
    Csv,
    /// `{ "assortativity": number|null, "reason": string? }`
    Json,
    /// `k,fraction` complementary cumulative degree distribution
    Ccdf,
}

#[derive(Debug, Args)]
struct KnnArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = KnnFormat::Csv)]
    format: KnnFormat,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct SuperpeersArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    top_n: TopNArg,
    #[command(flatten)]
    core: CoreArg,
    /// `json` for the full report, `csv` for the node,label,k,ksn,in_core profile.
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scope {
    /// The (possibly LCC-restricted) input graph.
    Network,
    /// The k-core subgraph; dropped nodes outside it are ignored.
    Core,
}

#[derive(Debug, Args)]
struct RobustnessArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    top_n: TopNArg,
    /// Comma-separated node labels to remove instead of the top-n super-peers.
    #[arg(long, value_delimiter = ',', value_name = "LABELS")]
    drop: Option<Vec<String>>,
    #[arg(long, value_enum, default_value_t = Scope::Network)]
    scope: Scope,
    #[command(flatten)]
    core: CoreArg,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, default_value_t = DEFAULT_NODES)]
    nodes: usize,
    #[arg(long, default_value_t = DEFAULT_SUPERS)]
    supers: usize,
    /// Outgoing connections per ordinary node.
    #[arg(long, default_value_t = DEFAULT_DOUT)]
    dout: usize,
    /// Probability that an outgoing connection targets a super-peer.
    #[arg(long, default_value_t = CALIBRATED_BIAS)]
    bias: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Probability that an ordinary node is a relay (0 disables the relay tier).
    #[arg(long, default_value_t = CALIBRATED_RELAY_FRACTION)]
    relay_fraction: f64,
    /// Extra links from each relay to earlier relays.
    #[arg(long, default_value_t = CALIBRATED_RELAY_LINKS)]
    relay_links: usize,
    /// Write the planted super-peer labels here, one per line.
    #[arg(long, value_name = "PATH")]
    truth: Option<PathBuf>,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Figure {
    /// Degree-ordered adjacency matrix with the core/periphery boundary.
    Matrix,
    /// Log-log K_nn(k) scatter annotated with the assortativity.
    Knn,
    /// Degree vs number of super-peer neighbors, core members highlighted.
    Scatter,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[arg(value_enum)]
    figure: Figure,
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    core: CoreArg,
    #[command(flatten)]
    top_n: TopNArg,
    /// Matrix only: draw just the k-core subgraph, super-peers first.
    #[arg(long)]
    core_only: bool,
    /// Matrix only: pixel size of one cell.
    #[arg(long, default_value_t = 4)]
    cell_px: u32,
    /// Matrix only: refuse graphs larger than this.
    #[arg(long, default_value_t = DEFAULT_MAX_RENDERABLE)]
    max_nodes: usize,
    /// Scatter only: x position of the dashed reference line.
    #[arg(long, default_value_t = DEFAULT_REFERENCE_X)]
    reference_x: f64,
    #[command(flatten)]
    out: OutArg,
}

enum Failure {
    Usage(String),
    Data(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Data(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Runs one invocation and returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{rendered}");
                EXIT_OK
            };
        }
    };
    let outcome = match cli.threads {
        Some(0) => Err(Failure::Usage("--threads must be at least 1".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => {
                let (mut out, mut err) = (Vec::new(), Vec::new());
                let result = pool.install(|| dispatch(&cli, &mut out, &mut err));
                let _ = stdout.write_all(&out);
                let _ = stderr.write_all(&err);
                result
            }
            Err(e) => Err(Failure::Usage(format!("cannot start thread pool: {e}"))),
        },
        None => dispatch(&cli, stdout, stderr),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}\n\nFor more information, try '--help'.");
            EXIT_USAGE
        }
        Err(Failure::Data(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_DATA
        }
    }
}

fn dispatch(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<()> {
    let sink = |out: &OutArg, name: &str| Sink::resolve(out, cli.out_dir.as_deref(), name);
    match &cli.command {
        Command::Ingest(a) => {
            let parsed = parse_edge_list(&read_input(&a.input)?)?;
            let _ = writeln!(
                stderr,
                "nodes {} edges {} duplicate-edges {} self-loops {}",
                parsed.graph.node_count(),
                parsed.graph.edge_count(),
                parsed.repairs.duplicate_edges,
                parsed.repairs.self_loops
            );
            sink(&a.out, "edges.txt").write(stdout, &serialize_edge_list(&parsed.graph))
        }
        Command::Analyze(a) => {
            let graph = load(&a.input.input, stderr)?;
            let params = AnalysisParams {
                top_n: a.top_n.top_n,
                k: core_k(&a.core)?,
                lcc: a.input.lcc,
            };
            let report = analysis_report(&graph, &params)?;
            sink(&a.out, "analysis.json").write(stdout, &to_json(&report))
        }
        Command::Kcore(a) => {
            let graph = prepared(&a.input, stderr)?;
            let decomposition = core_numbers(&graph);
            let k = core_k(&a.core)?;
            let members_at = a.members.then(|| k.unwrap_or(decomposition.k_max));
            let doc = kcore_json(&graph, &decomposition, members_at);
            sink(&a.out, "kcore.json").write(stdout, &to_json(&doc))
        }
        Command::Knn(a) => {
            let graph = prepared(&a.input, stderr)?;
            let (body, name) = match a.format {
                KnnFormat::Csv => (knn_csv(&knn_by_degree(&graph)), "knn.csv"),
                KnnFormat::Json => (to_json(&assortativity_json(&knn_by_degree(&graph))), "assortativity.json"),
                KnnFormat::Ccdf => {
                    let mut s = String::from("k,fraction\n");
                    for (k, f) in degree_ccdf(&graph) {
                        s.push_str(&format!("{k},{}\n", round_sig9(f)));
                    }
                    (s, "ccdf.csv")
                }
            };
            sink(&a.out, name).write(stdout, &body)
        }
        Command::Superpeers(a) => {
            let graph = prepared(&a.input, stderr)?;
            let supers = top_degree_nodes(&graph, a.top_n.top_n)?;
            let split = split_with(&core_numbers(&graph), core_k(&a.core)?);
            let profile = superpeer_degree_profile(&graph, &supers, &split.core)?;
            match a.format {
                ReportFormat::Csv => {
                    sink(&a.out, "profile.csv").write(stdout, &profile_csv(&graph, &profile))
                }
                ReportFormat::Json => {
                    let coverage = superpeer_coverage(&graph, &supers)?;
                    let overlap = shared_neighbor_overlap(&graph, &supers)?;
                    let doc = SuperPeerSection::new(&graph, &supers, &coverage, &overlap, &profile);
                    sink(&a.out, "superpeers.json").write(stdout, &to_json(&doc))
                }
            }
        }
        Command::Robustness(a) => {
            let graph = prepared(&a.input, stderr)?;
            let drop = match &a.drop {
                Some(labels) => resolve_labels(&graph, labels)?,
                None => top_degree_nodes(&graph, a.top_n.top_n)?,
            };
            let doc = match a.scope {
                Scope::Network => RemovalJson::new(&graph, &removal_robustness(&graph, &drop)?),
                Scope::Core => {
                    let split = split_with(&core_numbers(&graph), core_k(&a.core)?);
                    let (core, map) = graph.induced_subgraph(&split.core)?;
                    let inside: Vec<usize> = drop.iter().filter_map(|&v| map.to_new(v)).collect();
                    RemovalJson::new(&core, &removal_robustness(&core, &inside)?)
                }
            };
            sink(&a.out, "robustness.json").write(stdout, &to_json(&doc))
        }
        Command::Gen(a) => {
            let config = SyntheticConfig::new(a.nodes, a.supers, a.dout, a.bias, a.seed)
                .with_relays(a.relay_fraction, a.relay_links);
            config.validate().map_err(|e| Failure::Usage(e.to_string()))?;
            let network = generate(&config)?;
            if let Some(path) = &a.truth {
                let mut truth = String::new();
                for &s in &network.planted_supers {
                    truth.push_str(&network.graph.label(s));
                    truth.push('\n');
                }
                std::fs::write(path, truth).map_err(|e| Error::io(path, e))?;
            }
            let _ = writeln!(
                stderr,
                "generated nodes {} edges {} relays {}",
                network.graph.node_count(),
                network.graph.edge_count(),
                network.relays.len()
            );
            sink(&a.out, "edges.txt").write(stdout, &serialize_edge_list(&network.graph))
        }
        Command::Render(a) => {
            let graph = prepared(&a.input, stderr)?;
            let k = core_k(&a.core)?;
            let (doc, name) = match a.figure {
                Figure::Matrix => (render_matrix(&graph, a, k)?, "matrix.svg"),
                Figure::Knn => (knn_plot(&knn_by_degree(&graph))?, "knn.svg"),
                Figure::Scatter => {
                    let supers = top_degree_nodes(&graph, a.top_n.top_n)?;
                    let split = split_with(&core_numbers(&graph), k);
                    let profile = superpeer_degree_profile(&graph, &supers, &split.core)?;
                    (scatter_ksn_plot(&profile, a.reference_x)?, "scatter.svg")
                }
            };
            sink(&a.out, name).write(stdout, &doc)
        }
    }
}

fn render_matrix(graph: &Graph, a: &RenderArgs, k: Option<usize>) -> CliResult<String> {
    let split = split_with(&core_numbers(graph), k);
    let mut spec;
    let target;
    if a.core_only {
        let supers = top_degree_nodes(graph, a.top_n.top_n)?;
        let (core, map) = graph.induced_subgraph(&split.core)?;
        let inside: Vec<usize> = supers.iter().filter_map(|&s| map.to_new(s)).collect();
        spec = MatrixPlotSpec::degree_ordered(&core, Some(&inside))?;
        target = core;
    } else {
        spec = MatrixPlotSpec::degree_ordered(graph, Some(&split.core))?;
        target = graph.clone();
    }
    spec.cell_px = a.cell_px;
    spec.max_renderable_n = a.max_nodes;
    Ok(matrix_plot(&target, &spec)?)
}

fn core_k(arg: &CoreArg) -> CliResult<Option<usize>> {
    match arg.k {
        None => Ok(None),
        Some(k) if k < 0 => Err(Failure::Usage(format!("--k must be non-negative, got {k}"))),
        Some(k) => Ok(Some(k as usize)),
    }
}

fn resolve_labels(graph: &Graph, labels: &[String]) -> Result<Vec<usize>> {
    let index: std::collections::HashMap<String, usize> = (0..graph.node_count())
        .map(|v| (graph.label(v).into_owned(), v))
        .collect();
    labels
        .iter()
        .map(|l| {
            index
                .get(l.trim())
                .copied()
                .ok_or_else(|| Error::invalid(format!("unknown node label {l:?}")))
        })
        .collect()
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::io("<stdin>", e))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
    }
}

fn load(path: &Path, stderr: &mut dyn Write) -> Result<Graph> {
    let parsed = parse_edge_list(&read_input(path)?)?;
    let r = parsed.repairs;
    if r.duplicate_edges > 0 || r.self_loops > 0 {
        let _ = writeln!(
            stderr,
            "warning: merged {} duplicate edges, dropped {} self-loops",
            r.duplicate_edges, r.self_loops
        );
    }
    Ok(parsed.graph)
}

fn prepared(input: &InputArgs, stderr: &mut dyn Write) -> Result<Graph> {
    let graph = load(&input.input, stderr)?;
    Ok(if input.lcc {
        graph.largest_component().0
    } else {
        graph
    })
}

enum Sink {
    Stdout,
    File(PathBuf),
}

impl Sink {
    fn resolve(out: &OutArg, out_dir: Option<&Path>, default_name: &str) -> Sink {
        match (&out.out, out_dir) {
            (Some(path), _) => Sink::File(path.clone()),
            (None, Some(dir)) => Sink::File(dir.join(default_name)),
            (None, None) => Sink::Stdout,
        }
    }

    fn write(&self, stdout: &mut dyn Write, body: &str) -> CliResult<()> {
        match self {
            Sink::Stdout => stdout
                .write_all(body.as_bytes())
                .map_err(|e| Error::io("<stdout>", e).into()),
            Sink::File(path) => {
                if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                    std::fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
                }
                std::fs::write(path, body).map_err(|e| Error::io(path, e).into())
            }
        }
    }
}
