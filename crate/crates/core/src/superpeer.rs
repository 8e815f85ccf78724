//! Super-peer identification, coverage, neighbor overlap, per-node
//! super-peer degree profile, and fragility under node removal.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The `n` highest-degree nodes, descending, ties broken by ascending id.
pub fn top_degree_nodes(graph: &Graph, n: usize) -> Result<Vec<usize>> {
    if n == 0 || n > graph.node_count() {
        return Err(Error::invalid(format!(
            "top-n must be in 1..={}, got {n}",
            graph.node_count()
        )));
    }
    let mut nodes: Vec<usize> = (0..graph.node_count()).collect();
    nodes.sort_by(|&a, &b| {
        graph.neighbors(b).len().cmp(&graph.neighbors(a).len()).then(a.cmp(&b))
    });
    nodes.truncate(n);
    Ok(nodes)
}

fn validate_distinct(graph: &Graph, nodes: &[usize], what: &str) -> Result<Vec<bool>> {
    let mut mask = vec![false; graph.node_count()];
    for &v in nodes {
        graph.check_node(v)?;
        if mask[v] {
            return Err(Error::invalid(format!("duplicate {what} node {v}")));
        }
        mask[v] = true;
    }
    Ok(mask)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Coverage {
    /// |supers ∪ neighbors of supers|
    pub coverage_nodes: usize,
    /// |neighbors of supers \ supers|
    pub neighbor_only_nodes: usize,
    pub coverage_fraction: f64,
}

pub fn superpeer_coverage(graph: &Graph, supers: &[usize]) -> Result<Coverage> {
    let is_super = validate_distinct(graph, supers, "super")?;
    let mut covered = is_super.clone();
    for &s in supers {
        for &v in graph.neighbors(s) {
            covered[v] = true;
        }
    }
    let coverage_nodes = covered.iter().filter(|&&c| c).count();
    let n = graph.node_count();
    Ok(Coverage {
        coverage_nodes,
        neighbor_only_nodes: coverage_nodes - supers.len(),
        coverage_fraction: if n == 0 {
            0.0
        } else {
            coverage_nodes as f64 / n as f64
        },
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct NeighborOverlap {
    /// `|N(u) ∩ N(v)| / min(|N(u)|, |N(v)|)` over non-super neighbors; unit diagonal.
    pub min_normalized: Vec<Vec<f64>>,
    /// `|N(u) ∩ N(v)| / |N(u) ∪ N(v)|` over non-super neighbors; unit diagonal.
    pub jaccard: Vec<Vec<f64>>,
    /// Per super, the largest off-diagonal min-normalized value (`None` when S = 1).
    pub max_off_diagonal: Vec<Option<f64>>,
}

/// Pairwise overlap of the supers' neighbor sets, supers themselves removed
/// from every set first. An entry whose smaller set is empty is 0.
pub fn shared_neighbor_overlap(graph: &Graph, supers: &[usize]) -> Result<NeighborOverlap> {
    let is_super = validate_distinct(graph, supers, "super")?;
    if let Some(&s) = supers.iter().find(|&&s| graph.neighbors(s).is_empty()) {
        return Err(Error::invalid(format!(
            "super node {s} ({}) has degree 0",
            graph.label(s)
        )));
    }
    let sets: Vec<Vec<usize>> = supers
        .iter()
        .map(|&s| {
            graph
                .neighbors(s)
                .iter()
                .copied()
                .filter(|&v| !is_super[v])
                .collect()
        })
        .collect();
    let size = supers.len();
    let mut min_normalized = vec![vec![1.0; size]; size];
    let mut jaccard = vec![vec![1.0; size]; size];
    for a in 0..size {
        for b in (a + 1)..size {
            let common = sorted_intersection_len(&sets[a], &sets[b]);
            let smaller = sets[a].len().min(sets[b].len());
            let union = sets[a].len() + sets[b].len() - common;
            let m = if smaller == 0 { 0.0 } else { common as f64 / smaller as f64 };
            let j = if union == 0 { 0.0 } else { common as f64 / union as f64 };
            min_normalized[a][b] = m;
            min_normalized[b][a] = m;
            jaccard[a][b] = j;
            jaccard[b][a] = j;
        }
    }
    let max_off_diagonal = (0..size)
        .map(|a| {
            (0..size)
                .filter(|&b| b != a)
                .map(|b| min_normalized[a][b])
                .fold(None, |acc: Option<f64>, x| Some(acc.map_or(x, |m| m.max(x))))
        })
        .collect();
    Ok(NeighborOverlap {
        min_normalized,
        jaccard,
        max_off_diagonal,
    })
}

fn sorted_intersection_len(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProfileEntry {
    pub node: usize,
    /// Total degree.
    pub k: usize,
    /// Number of neighbors that are supers.
    pub ksn: usize,
    pub in_core: bool,
}

/// `(k_i, ksn_i, in_core)` for every node. `core` is any node set, usually
/// the core of a core/periphery split.
pub fn superpeer_degree_profile(
    graph: &Graph,
    supers: &[usize],
    core: &[usize],
) -> Result<Vec<ProfileEntry>> {
    let is_super = validate_distinct(graph, supers, "super")?;
    let mut in_core = vec![false; graph.node_count()];
    for &v in core {
        graph.check_node(v)?;
        in_core[v] = true;
    }
    Ok((0..graph.node_count())
        .into_par_iter()
        .map(|v| ProfileEntry {
            node: v,
            k: graph.neighbors(v).len(),
            ksn: graph.neighbors(v).iter().filter(|&&u| is_super[u]).count(),
            in_core: in_core[v],
        })
        .collect())
}

/// `node,label,k,ksn,in_core` rows with a header line.
pub fn profile_csv(graph: &Graph, profile: &[ProfileEntry]) -> String {
    let mut out = String::from("node,label,k,ksn,in_core\n");
    for e in profile {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            e.node,
            csv_field(&graph.label(e.node)),
            e.k,
            e.ksn,
            e.in_core
        ));
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentStats {
    pub node_count: usize,
    pub edge_count: usize,
    pub largest_component: usize,
    pub isolated_nodes: usize,
    pub component_count: usize,
}

impl ComponentStats {
    pub fn of(graph: &Graph) -> ComponentStats {
        let parts = graph.connected_components();
        ComponentStats {
            node_count: graph.node_count(),
            edge_count: graph.edge_count(),
            largest_component: parts.largest(),
            isolated_nodes: graph.isolated_count(),
            component_count: parts.count(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RobustnessReport {
    pub removed: Vec<usize>,
    pub before: ComponentStats,
    pub after: ComponentStats,
}

pub fn removal_robustness(graph: &Graph, drop: &[usize]) -> Result<RobustnessReport> {
    validate_distinct(graph, drop, "removed")?;
    let (rest, _) = graph.remove_nodes(drop)?;
    Ok(RobustnessReport {
        removed: drop.to_vec(),
        before: ComponentStats::of(graph),
        after: ComponentStats::of(&rest),
    })
}
