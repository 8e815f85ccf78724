//! Slow, obviously-correct reference implementations used as oracles.
#![allow(dead_code)]

use std::collections::BTreeSet;

use p2ptopo::Graph;
use rand::rngs::StdRng;
use rand::Rng;

/// G(n, p) with edges drawn independently per unordered pair.
pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn adjacency_sets(g: &Graph) -> Vec<BTreeSet<usize>> {
    (0..g.node_count())
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect()
}

/// Core number by definition: for each k, repeatedly delete nodes with fewer
/// than k surviving neighbors; a node's core number is the last k it survives.
pub fn brute_core_numbers(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    let adj = adjacency_sets(g);
    let mut core = vec![0; n];
    for k in 1..=n {
        let mut alive = vec![true; n];
        loop {
            let doomed: Vec<usize> = (0..n)
                .filter(|&v| alive[v] && adj[v].iter().filter(|&&u| alive[u]).count() < k)
                .collect();
            if doomed.is_empty() {
                break;
            }
            for v in doomed {
                alive[v] = false;
            }
        }
        if !alive.contains(&true) {
            break;
        }
        for v in 0..n {
            if alive[v] {
                core[v] = k;
            }
        }
    }
    core
}

/// Textbook two-pass Pearson over both orientations of every edge.
/// `None` when there are no edges or either side has zero variance.
pub fn pearson_assortativity(g: &Graph) -> Option<f64> {
    let deg = g.degrees();
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (u, v) in g.edges() {
        xs.push(deg[u] as f64);
        ys.push(deg[v] as f64);
        xs.push(deg[v] as f64);
        ys.push(deg[u] as f64);
    }
    if xs.is_empty() {
        return None;
    }
    let m = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(&ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some(sxy / (sxx * syy).sqrt())
}

/// Sum of `deg(u)` over every directed edge occurrence `v -> u`.
pub fn directed_neighbor_degree_sum(g: &Graph) -> u64 {
    let deg = g.degrees();
    (0..g.node_count())
        .flat_map(|v| g.neighbors(v).iter().map(|&u| deg[u] as u64).collect::<Vec<_>>())
        .sum()
}

/// Component label per node via repeated relaxation to the minimum
/// reachable id (a transitive-closure fixpoint).
pub fn min_reachable_label(g: &Graph) -> Vec<usize> {
    let mut label: Vec<usize> = (0..g.node_count()).collect();
    loop {
        let mut changed = false;
        for (u, v) in g.edges() {
            let m = label[u].min(label[v]);
            if label[u] != m || label[v] != m {
                label[u] = m;
                label[v] = m;
                changed = true;
            }
        }
        if !changed {
            return label;
        }
    }
}
