//! Degree correlations: mean neighbor degree per node and per degree class,
//! Newman's degree assortativity, and the degree CCDF.
//!
//! Per-class values keep the integer neighbor-degree sum next to the float
//! mean, so `sum_k n_k * k * knn_k` can be audited exactly against the edge
//! list.

use rayon::prelude::*;

use crate::graph::Graph;

/// Mean degree of each node's neighbors; `None` for isolated nodes.
pub fn knn_per_node(graph: &Graph) -> Vec<Option<f64>> {
    (0..graph.node_count())
        .into_par_iter()
        .map(|v| {
            let nbrs = graph.neighbors(v);
            if nbrs.is_empty() {
                None
            } else {
                Some(neighbor_degree_sum(graph, v) as f64 / nbrs.len() as f64)
            }
        })
        .collect()
}

fn neighbor_degree_sum(graph: &Graph, v: usize) -> u64 {
    graph
        .neighbors(v)
        .iter()
        .map(|&u| graph.neighbors(u).len() as u64)
        .sum()
}

#[derive(Debug, Clone, PartialEq)]
pub struct KnnRow {
    pub k: usize,
    pub n_k: usize,
    /// Sum over the class of each node's neighbor-degree sum.
    pub neighbor_degree_sum: u64,
    pub knn: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Assortativity {
    Defined(f64),
    Undefined { reason: &'static str },
}

impl Assortativity {
    pub fn value(&self) -> Option<f64> {
        match self {
            Assortativity::Defined(r) => Some(*r),
            Assortativity::Undefined { .. } => None,
        }
    }

    pub fn reason(&self) -> Option<&'static str> {
        match self {
            Assortativity::Defined(_) => None,
            Assortativity::Undefined { reason } => Some(reason),
        }
    }
}

pub const NO_EDGES: &str = "no edges";
pub const ZERO_VARIANCE: &str = "zero variance in endpoint degrees";

#[derive(Debug, Clone, PartialEq)]
pub struct DegreeCorrelationTable {
    /// One row per degree `k >= 1` present in the graph, ascending.
    pub rows: Vec<KnnRow>,
    pub assortativity: Assortativity,
}

impl DegreeCorrelationTable {
    pub fn row(&self, k: usize) -> Option<&KnnRow> {
        self.rows
            .binary_search_by_key(&k, |r| r.k)
            .ok()
            .map(|i| &self.rows[i])
    }
}

/// `K_nn(k)`: for each degree class, the mean over its nodes of their mean
/// neighbor degree. Equal to `sum_i S_i / (n_k * k)` where `S_i` is node
/// `i`'s neighbor-degree sum, which is how it is evaluated.
pub fn knn_by_degree(graph: &Graph) -> DegreeCorrelationTable {
    let max_degree = graph.max_degree();
    let mut n_k = vec![0usize; max_degree + 1];
    let mut sums = vec![0u64; max_degree + 1];
    let per_node: Vec<(usize, u64)> = (0..graph.node_count())
        .into_par_iter()
        .map(|v| (graph.neighbors(v).len(), neighbor_degree_sum(graph, v)))
        .collect();
    for (k, s) in per_node {
        n_k[k] += 1;
        sums[k] += s;
    }
    let rows = (1..=max_degree)
        .filter(|&k| n_k[k] > 0)
        .map(|k| KnnRow {
            k,
            n_k: n_k[k],
            neighbor_degree_sum: sums[k],
            knn: sums[k] as f64 / (n_k[k] * k) as f64,
        })
        .collect();
    DegreeCorrelationTable {
        rows,
        assortativity: assortativity(graph),
    }
}

/// Pearson correlation of the degrees at either end of an edge, taken over
/// both orientations of every undirected edge.
///
/// With `M = 2|E|` ordered pairs the marginals coincide, so
/// `r = (M * sum(k_u k_v) - (sum k_u)^2) / (M * sum(k_u^2) - (sum k_u)^2)`.
/// The sums are accumulated in 128-bit integers and divided once.
pub fn assortativity(graph: &Graph) -> Assortativity {
    if graph.edge_count() == 0 {
        return Assortativity::Undefined { reason: NO_EDGES };
    }
    let degree = graph.degrees();
    let ordered_pairs = 2 * graph.edge_count() as u128;
    let mut cross = 0u128;
    for (u, v) in graph.edges() {
        cross += 2 * (degree[u] as u128) * (degree[v] as u128);
    }
    // Each node appears as the first endpoint of k_i ordered pairs.
    let sum_first: u128 = degree.iter().map(|&k| (k as u128).pow(2)).sum();
    let sum_sq: u128 = degree.iter().map(|&k| (k as u128).pow(3)).sum();
    let numerator = (ordered_pairs * cross) as i128 - (sum_first * sum_first) as i128;
    let denominator = (ordered_pairs * sum_sq) as i128 - (sum_first * sum_first) as i128;
    if denominator == 0 {
        return Assortativity::Undefined {
            reason: ZERO_VARIANCE,
        };
    }
    Assortativity::Defined((numerator as f64 / denominator as f64).clamp(-1.0, 1.0))
}

/// Fraction of nodes with degree at least `k`, for `k` in `0..=max_degree + 1`.
/// Empty for a graph without nodes.
pub fn degree_ccdf(graph: &Graph) -> Vec<(usize, f64)> {
    let n = graph.node_count();
    if n == 0 {
        return Vec::new();
    }
    let max_degree = graph.max_degree();
    let mut counts = vec![0usize; max_degree + 2];
    for k in graph.degrees() {
        counts[k] += 1;
    }
    let mut at_least = n;
    let mut out = Vec::with_capacity(max_degree + 2);
    for (k, count) in counts.iter().enumerate() {
        out.push((k, at_least as f64 / n as f64));
        at_least -= count;
    }
    out
}
