//! Machine-readable outputs: the full analysis report plus the smaller JSON
//! and CSV documents emitted by individual subcommands.
//!
//! Field order is fixed by struct declaration order. Reals are rounded to 9
//! significant digits and then printed shortest-round-trip; undefined values
//! are `null`.

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::correlation::{knn_by_degree, DegreeCorrelationTable};
use crate::edgelist::serialize_edge_list;
use crate::error::Result;
use crate::graph::Graph;
use crate::kcore::{core_numbers, split_with, CoreDecomposition};
use crate::superpeer::{
    removal_robustness, shared_neighbor_overlap, superpeer_coverage, superpeer_degree_profile,
    top_degree_nodes, ComponentStats, Coverage, NeighborOverlap, ProfileEntry, RobustnessReport,
};

pub const REPORT_SCHEMA_ID: &str = "p2ptopo/analysis-report/v1";
/// JSON Schema (draft 2020-12) for [`AnalysisReport`] documents.
pub const REPORT_JSON_SCHEMA: &str = include_str!("../schema/analysis-report.v1.schema.json");
pub const DEFAULT_TOP_N: usize = 14;

/// A real rounded to 9 significant digits on output; non-finite becomes null.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sig9(pub f64);

pub fn round_sig9(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.8e}").parse().expect("formatted float parses")
}

impl Serialize for Sig9 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            serializer.serialize_f64(round_sig9(self.0))
        } else {
            serializer.serialize_none()
        }
    }
}

fn sig9_opt(x: Option<f64>) -> Option<Sig9> {
    x.map(Sig9)
}

/// `{ "k": count }` with keys in ascending numeric order, empty shells omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellSizes(pub Vec<usize>);

impl Serialize for ShellSizes {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let nonempty: Vec<(usize, usize)> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, &c)| (k, c))
            .collect();
        let mut map = serializer.serialize_map(Some(nonempty.len()))?;
        for (k, c) in nonempty {
            map.serialize_entry(&k.to_string(), &c)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisParams {
    pub top_n: usize,
    /// Core threshold; `None` means `k_max`.
    pub k: Option<usize>,
    /// Restrict the analysis to the largest connected component.
    pub lcc: bool,
}

impl Default for AnalysisParams {
    fn default() -> Self {
        AnalysisParams {
            top_n: DEFAULT_TOP_N,
            k: None,
            lcc: false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub provenance: Provenance,
    pub graph: GraphSummary,
    pub kcore: KcoreSummary,
    pub degree_correlation: CorrelationSection,
    pub superpeers: SuperPeerSection,
    pub robustness: RobustnessSection,
}

#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub tool: &'static str,
    pub version: &'static str,
    /// SHA-256 of the canonical edge-list serialization of the input graph.
    pub input_digest: String,
    pub input_node_count: usize,
    pub input_edge_count: usize,
    pub parameters: ParameterEcho,
}

#[derive(Debug, Clone, Serialize)]
pub struct ParameterEcho {
    pub top_n: usize,
    pub k: Option<usize>,
    pub lcc_applied: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphSummary {
    pub node_count: usize,
    pub edge_count: usize,
    pub max_degree: usize,
    pub mean_degree: Sig9,
    pub component_count: usize,
    pub largest_component: usize,
    pub isolated_nodes: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct KcoreSummary {
    pub k_max: usize,
    pub shell_sizes: ShellSizes,
    pub core_k: usize,
    pub core_size: usize,
    pub periphery_size: usize,
    pub core_members: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct KnnRowJson {
    pub k: usize,
    pub n_k: usize,
    pub knn: Sig9,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorrelationSection {
    pub rows: Vec<KnnRowJson>,
    pub assortativity: Option<Sig9>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<&'static str>,
}

impl CorrelationSection {
    pub fn from_table(table: &DegreeCorrelationTable) -> CorrelationSection {
        CorrelationSection {
            rows: table
                .rows
                .iter()
                .map(|r| KnnRowJson {
                    k: r.k,
                    n_k: r.n_k,
                    knn: Sig9(r.knn),
                })
                .collect(),
            assortativity: sig9_opt(table.assortativity.value()),
            reason: table.assortativity.reason(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OverlapJson {
    pub min_normalized: Vec<Vec<Sig9>>,
    pub jaccard: Vec<Vec<Sig9>>,
    pub max_off_diagonal: Vec<Option<Sig9>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProfileJson {
    pub k: Vec<usize>,
    pub ksn: Vec<usize>,
    pub in_core: Vec<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuperPeerSection {
    pub supers: Vec<String>,
    pub super_degrees: Vec<usize>,
    pub coverage_nodes: usize,
    pub neighbor_only_nodes: usize,
    pub coverage_fraction: Sig9,
    pub overlap: OverlapJson,
    pub profile: ProfileJson,
}

impl SuperPeerSection {
    pub fn new(
        graph: &Graph,
        supers: &[usize],
        coverage: &Coverage,
        overlap: &NeighborOverlap,
        profile: &[ProfileEntry],
    ) -> SuperPeerSection {
        let square = |m: &[Vec<f64>]| -> Vec<Vec<Sig9>> {
            m.iter().map(|row| row.iter().copied().map(Sig9).collect()).collect()
        };
        SuperPeerSection {
            supers: supers.iter().map(|&s| graph.label(s).into_owned()).collect(),
            super_degrees: supers.iter().map(|&s| graph.neighbors(s).len()).collect(),
            coverage_nodes: coverage.coverage_nodes,
            neighbor_only_nodes: coverage.neighbor_only_nodes,
            coverage_fraction: Sig9(coverage.coverage_fraction),
            overlap: OverlapJson {
                min_normalized: square(&overlap.min_normalized),
                jaccard: square(&overlap.jaccard),
                max_off_diagonal: overlap.max_off_diagonal.iter().map(|&m| sig9_opt(m)).collect(),
            },
            profile: ProfileJson {
                k: profile.iter().map(|e| e.k).collect(),
                ksn: profile.iter().map(|e| e.ksn).collect(),
                in_core: profile.iter().map(|e| e.in_core).collect(),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StatsJson {
    pub node_count: usize,
    pub edge_count: usize,
    pub largest_component: usize,
    pub isolated_nodes: usize,
    pub component_count: usize,
}

impl From<ComponentStats> for StatsJson {
    fn from(s: ComponentStats) -> Self {
        StatsJson {
            node_count: s.node_count,
            edge_count: s.edge_count,
            largest_component: s.largest_component,
            isolated_nodes: s.isolated_nodes,
            component_count: s.component_count,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RemovalJson {
    pub removed: Vec<String>,
    pub before: StatsJson,
    pub after: StatsJson,
}

impl RemovalJson {
    pub fn new(graph: &Graph, report: &RobustnessReport) -> RemovalJson {
        RemovalJson {
            removed: report.removed.iter().map(|&v| graph.label(v).into_owned()).collect(),
            before: report.before.into(),
            after: report.after.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RobustnessSection {
    /// Supers removed from the analyzed graph.
    pub network: RemovalJson,
    /// Supers that lie in the core, removed from the core subgraph.
    pub core: RemovalJson,
}

pub fn digest(graph: &Graph) -> String {
    let hash = Sha256::digest(serialize_edge_list(graph).as_bytes());
    format!("sha256:{}", hex::encode(hash))
}

pub fn analysis_report(input: &Graph, params: &AnalysisParams) -> Result<AnalysisReport> {
    let lcc_graph;
    let graph = if params.lcc {
        lcc_graph = input.largest_component().0;
        &lcc_graph
    } else {
        input
    };

    let decomposition = core_numbers(graph);
    let split = split_with(&decomposition, params.k);
    let table = knn_by_degree(graph);
    let supers = top_degree_nodes(graph, params.top_n)?;
    let coverage = superpeer_coverage(graph, &supers)?;
    let overlap = shared_neighbor_overlap(graph, &supers)?;
    let profile = superpeer_degree_profile(graph, &supers, &split.core)?;
    let network_removal = removal_robustness(graph, &supers)?;

    let (core_graph, core_map) = graph.induced_subgraph(&split.core)?;
    let supers_in_core: Vec<usize> = supers.iter().filter_map(|&s| core_map.to_new(s)).collect();
    let core_removal = removal_robustness(&core_graph, &supers_in_core)?;

    let parts = graph.connected_components();
    let labels = |nodes: &[usize]| -> Vec<String> {
        nodes.iter().map(|&v| graph.label(v).into_owned()).collect()
    };

    Ok(AnalysisReport {
        schema: REPORT_SCHEMA_ID,
        provenance: Provenance {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            input_digest: digest(input),
            input_node_count: input.node_count(),
            input_edge_count: input.edge_count(),
            parameters: ParameterEcho {
                top_n: params.top_n,
                k: params.k,
                lcc_applied: params.lcc,
            },
        },
        graph: GraphSummary {
            node_count: graph.node_count(),
            edge_count: graph.edge_count(),
            max_degree: graph.max_degree(),
            mean_degree: Sig9(if graph.node_count() == 0 {
                0.0
            } else {
                2.0 * graph.edge_count() as f64 / graph.node_count() as f64
            }),
            component_count: parts.count(),
            largest_component: parts.largest(),
            isolated_nodes: graph.isolated_count(),
        },
        kcore: KcoreSummary {
            k_max: decomposition.k_max,
            shell_sizes: ShellSizes(decomposition.shell_sizes.clone()),
            core_k: split.k,
            core_size: split.core.len(),
            periphery_size: split.periphery.len(),
            core_members: labels(&split.core),
        },
        degree_correlation: CorrelationSection::from_table(&table),
        superpeers: SuperPeerSection::new(graph, &supers, &coverage, &overlap, &profile),
        robustness: RobustnessSection {
            network: RemovalJson::new(graph, &network_removal),
            core: RemovalJson::new(&core_graph, &core_removal),
        },
    })
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, Serialize)]
pub struct KcoreJson {
    pub k_max: usize,
    pub shell_sizes: ShellSizes,
    pub core_numbers: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub core_k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub core_members: Option<Vec<String>>,
}

/// `{ "k_max", "shell_sizes", "core_numbers" }`, plus the labels of the
/// `k`-core members when `members_at` is given.
pub fn kcore_json(graph: &Graph, decomposition: &CoreDecomposition, members_at: Option<usize>) -> KcoreJson {
    KcoreJson {
        k_max: decomposition.k_max,
        shell_sizes: ShellSizes(decomposition.shell_sizes.clone()),
        core_numbers: decomposition.core_number.clone(),
        core_k: members_at,
        core_members: members_at.map(|k| {
            decomposition
                .k_core_members(k)
                .into_iter()
                .map(|v| graph.label(v).into_owned())
                .collect()
        }),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AssortativityJson {
    pub assortativity: Option<Sig9>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<&'static str>,
}

pub fn assortativity_json(table: &DegreeCorrelationTable) -> AssortativityJson {
    AssortativityJson {
        assortativity: sig9_opt(table.assortativity.value()),
        reason: table.assortativity.reason(),
    }
}

/// `k,n_k,knn_k` rows with a header line.
pub fn knn_csv(table: &DegreeCorrelationTable) -> String {
    let mut out = String::from("k,n_k,knn_k\n");
    for r in &table.rows {
        out.push_str(&format!("{},{},{}\n", r.k, r.n_k, round_sig9(r.knn)));
    }
    out
}
