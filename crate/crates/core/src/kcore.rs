//! k-core decomposition and the core/periphery split.
//!
//! Core numbers are computed with the Batagelj–Zaversnik bucket method:
//! nodes sit in an array sorted by current degree, `bin_start[d]` marks where
//! degree `d` begins, and removing the minimum node moves each higher-degree
//! neighbor one bucket down with a single swap. O(V + E) overall.

use crate::error::Result;
use crate::graph::{Graph, IdMap};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreDecomposition {
    pub core_number: Vec<usize>,
    pub k_max: usize,
    /// `shell_sizes[k]` = number of nodes with core number exactly `k`,
    /// for `k` in `0..=k_max`.
    pub shell_sizes: Vec<usize>,
}

impl CoreDecomposition {
    /// Nodes with core number at least `k`, ascending.
    pub fn k_core_members(&self, k: usize) -> Vec<usize> {
        self.core_number
            .iter()
            .enumerate()
            .filter(|(_, &c)| c >= k)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn k_core_size(&self, k: usize) -> usize {
        self.core_number.iter().filter(|&&c| c >= k).count()
    }
}

pub fn core_numbers(graph: &Graph) -> CoreDecomposition {
    let n = graph.node_count();
    let mut degree = graph.degrees();
    let max_degree = degree.iter().copied().max().unwrap_or(0);

    let mut bin_start = vec![0usize; max_degree + 1];
    for &d in &degree {
        bin_start[d] += 1;
    }
    let mut start = 0;
    for slot in bin_start.iter_mut() {
        let count = *slot;
        *slot = start;
        start += count;
    }

    // Counting sort by degree; ids ascend inside each bucket.
    let mut order = vec![0usize; n];
    let mut pos = vec![0usize; n];
    let mut next = bin_start.clone();
    for v in 0..n {
        let d = degree[v];
        pos[v] = next[d];
        order[pos[v]] = v;
        next[d] += 1;
    }

    for i in 0..n {
        let v = order[i];
        for &u in graph.neighbors(v) {
            if degree[u] > degree[v] {
                let du = degree[u];
                let pu = pos[u];
                let pw = bin_start[du];
                let w = order[pw];
                if u != w {
                    order.swap(pu, pw);
                    pos[u] = pw;
                    pos[w] = pu;
                }
                bin_start[du] += 1;
                degree[u] -= 1;
            }
        }
    }

    let core_number = degree;
    let k_max = core_number.iter().copied().max().unwrap_or(0);
    let mut shell_sizes = vec![0usize; k_max + 1];
    for &c in &core_number {
        shell_sizes[c] += 1;
    }
    CoreDecomposition {
        core_number,
        k_max,
        shell_sizes,
    }
}

/// Subgraph induced by the nodes with core number at least `k`. Empty when
/// `k > k_max`.
pub fn k_core_subgraph(graph: &Graph, k: usize) -> Result<(Graph, IdMap)> {
    let decomposition = core_numbers(graph);
    graph.induced_subgraph(&decomposition.k_core_members(k))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorePeripherySplit {
    pub k: usize,
    pub core: Vec<usize>,
    pub periphery: Vec<usize>,
}

impl CorePeripherySplit {
    pub fn in_core_mask(&self, node_count: usize) -> Vec<bool> {
        let mut mask = vec![false; node_count];
        for &v in &self.core {
            mask[v] = true;
        }
        mask
    }
}

/// Core = the `k`-core node set (default `k_max`), periphery = everything else.
pub fn core_periphery_split(graph: &Graph, k: Option<usize>) -> CorePeripherySplit {
    split_with(&core_numbers(graph), k)
}

pub fn split_with(decomposition: &CoreDecomposition, k: Option<usize>) -> CorePeripherySplit {
    let k = k.unwrap_or(decomposition.k_max);
    let (core, periphery) = (0..decomposition.core_number.len())
        .partition(|&v| decomposition.core_number[v] >= k);
    CorePeripherySplit { k, core, periphery }
}
