//! Simple undirected graph over dense node ids.
//!
//! Adjacency is stored in compressed-row form: `offsets[v]..offsets[v + 1]`
//! indexes the sorted neighbor list of `v` inside `targets`. A graph is
//! immutable once built, so it can be shared freely between readers.

use std::borrow::Cow;
use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    labels: Option<Vec<String>>,
}

/// Counts of input edges that were repaired while building a graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EdgeRepairs {
    pub duplicate_edges: usize,
    pub self_loops: usize,
}

/// Mapping between the ids of a parent graph and a derived subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdMap {
    old_to_new: Vec<Option<usize>>,
    new_to_old: Vec<usize>,
}

impl IdMap {
    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    pub fn to_old(&self, new: usize) -> usize {
        self.new_to_old[new]
    }

    /// Parent ids of the subgraph's nodes, indexed by subgraph id.
    pub fn kept(&self) -> &[usize] {
        &self.new_to_old
    }
}

impl Graph {
    /// Builds a graph from an edge iterator, merging duplicates and dropping
    /// self-loops. Edge direction is ignored.
    pub fn from_edges<I>(node_count: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::build(node_count, edges, None).map(|(g, _)| g)
    }

    pub(crate) fn build<I>(
        node_count: usize,
        edges: I,
        labels: Option<Vec<String>>,
    ) -> Result<(Graph, EdgeRepairs)>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if let Some(labels) = &labels {
            if labels.len() != node_count {
                return Err(Error::invalid(format!(
                    "{} labels supplied for {} nodes",
                    labels.len(),
                    node_count
                )));
            }
        }
        let mut repairs = EdgeRepairs::default();
        let mut pairs = Vec::new();
        for (u, v) in edges {
            for node in [u, v] {
                if node >= node_count {
                    return Err(Error::NodeOutOfRange { node, node_count });
                }
            }
            if u == v {
                repairs.self_loops += 1;
                continue;
            }
            pairs.push((u.min(v), u.max(v)));
        }
        let raw = pairs.len();
        pairs.sort_unstable();
        pairs.dedup();
        repairs.duplicate_edges = raw - pairs.len();

        let mut degree = vec![0usize; node_count];
        for &(u, v) in &pairs {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(node_count + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        // Pairs are sorted by (min, max), so every list is filled in
        // ascending order: entries smaller than v arrive (as the max side)
        // before any entry larger than v (as the min side).
        let mut fill = offsets[..node_count].to_vec();
        let mut targets = vec![0usize; 2 * pairs.len()];
        for &(u, v) in &pairs {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        Ok((
            Graph {
                offsets,
                targets,
                labels,
            },
            repairs,
        ))
    }

    pub fn empty(node_count: usize) -> Graph {
        Graph {
            offsets: vec![0; node_count + 1],
            targets: Vec::new(),
            labels: None,
        }
    }

    /// Attaches external labels, one per node. Labels must be distinct.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.node_count() {
            return Err(Error::invalid(format!(
                "{} labels supplied for {} nodes",
                labels.len(),
                self.node_count()
            )));
        }
        let distinct: BTreeSet<&str> = labels.iter().map(String::as_str).collect();
        if distinct.len() != labels.len() {
            return Err(Error::invalid("node labels must be distinct"));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    /// Sorted neighbor list. Panics if `node` is out of range.
    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.targets[self.offsets[node]..self.offsets[node + 1]]
    }

    pub fn degree(&self, node: usize) -> Result<usize> {
        self.check_node(node)?;
        Ok(self.neighbors(node).len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.offsets.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.offsets.windows(2).map(|w| w[1] - w[0]).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.node_count() && v < self.node_count() && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Every undirected edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.node_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn isolated_count(&self) -> usize {
        self.offsets.windows(2).filter(|w| w[0] == w[1]).count()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// External label of a node; the decimal id when the graph is unlabeled.
    pub fn label(&self, node: usize) -> Cow<'_, str> {
        match &self.labels {
            Some(labels) => Cow::Borrowed(labels[node].as_str()),
            None => Cow::Owned(node.to_string()),
        }
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        if node < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node,
                node_count: self.node_count(),
            })
        }
    }

    /// True when both graphs have the same node count and the same edge set
    /// once nodes are identified by label.
    pub fn same_structure(&self, other: &Graph) -> bool {
        if self.node_count() != other.node_count() || self.edge_count() != other.edge_count() {
            return false;
        }
        labeled_edge_set(self) == labeled_edge_set(other)
    }

    /// Reachability partition. Components are discovered from the smallest
    /// unvisited id, then renumbered by descending size (ties keep the
    /// discovery order, i.e. smallest member id first).
    pub fn connected_components(&self) -> ComponentPartition {
        let n = self.node_count();
        let mut discovered = vec![usize::MAX; n];
        let mut sizes = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if discovered[start] != usize::MAX {
                continue;
            }
            let id = sizes.len();
            discovered[start] = id;
            queue.push_back(start);
            let mut size = 0;
            while let Some(u) = queue.pop_front() {
                size += 1;
                for &v in self.neighbors(u) {
                    if discovered[v] == usize::MAX {
                        discovered[v] = id;
                        queue.push_back(v);
                    }
                }
            }
            sizes.push(size);
        }
        let mut order: Vec<usize> = (0..sizes.len()).collect();
        order.sort_by(|&a, &b| sizes[b].cmp(&sizes[a]).then(a.cmp(&b)));
        let mut rank = vec![0; sizes.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        ComponentPartition {
            component_id: discovered.into_iter().map(|c| rank[c]).collect(),
            component_sizes: order.iter().map(|&c| sizes[c]).collect(),
        }
    }

    /// Subgraph induced by `keep`. New ids follow ascending parent id; the
    /// subgraph carries the parent's labels.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<(Graph, IdMap)> {
        let n = self.node_count();
        let mut mask = vec![false; n];
        for &v in keep {
            self.check_node(v)?;
            mask[v] = true;
        }
        Ok(self.subgraph_from_mask(&mask))
    }

    /// Equivalent to `induced_subgraph` over the complement of `drop`.
    pub fn remove_nodes(&self, drop: &[usize]) -> Result<(Graph, IdMap)> {
        let mut mask = vec![true; self.node_count()];
        for &v in drop {
            self.check_node(v)?;
            mask[v] = false;
        }
        Ok(self.subgraph_from_mask(&mask))
    }

    /// Subgraph induced by the largest connected component.
    pub fn largest_component(&self) -> (Graph, IdMap) {
        let parts = self.connected_components();
        let mask: Vec<bool> = parts.component_id.iter().map(|&c| c == 0).collect();
        self.subgraph_from_mask(&mask)
    }

    fn subgraph_from_mask(&self, mask: &[bool]) -> (Graph, IdMap) {
        let mut old_to_new = vec![None; mask.len()];
        let mut new_to_old = Vec::new();
        for (old, _) in mask.iter().enumerate().filter(|(_, &keep)| keep) {
            old_to_new[old] = Some(new_to_old.len());
            new_to_old.push(old);
        }
        let mut offsets = Vec::with_capacity(new_to_old.len() + 1);
        offsets.push(0);
        let mut targets = Vec::new();
        for &old in &new_to_old {
            // Parent lists are sorted and the renumbering is monotone, so the
            // filtered lists stay sorted.
            targets.extend(self.neighbors(old).iter().filter_map(|&v| old_to_new[v]));
            offsets.push(targets.len());
        }
        let labels = new_to_old.iter().map(|&old| self.label(old).into_owned()).collect();
        (
            Graph {
                offsets,
                targets,
                labels: Some(labels),
            },
            IdMap {
                old_to_new,
                new_to_old,
            },
        )
    }
}

fn labeled_edge_set(g: &Graph) -> BTreeSet<(String, String)> {
    g.edges()
        .map(|(u, v)| {
            let (a, b) = (g.label(u).into_owned(), g.label(v).into_owned());
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub component_id: Vec<usize>,
    /// Sizes indexed by component id, non-increasing.
    pub component_sizes: Vec<usize>,
}

impl ComponentPartition {
    pub fn count(&self) -> usize {
        self.component_sizes.len()
    }

    pub fn largest(&self) -> usize {
        self.component_sizes.first().copied().unwrap_or(0)
    }

    pub fn members(&self, component: usize) -> Vec<usize> {
        self.component_id
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == component)
            .map(|(v, _)| v)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|l| (0, l))).unwrap()
    }

    #[test]
    fn degrees_of_small_graphs() {
        assert_eq!(triangle().degree(0).unwrap(), 2);
        assert_eq!(star(3).degree(0).unwrap(), 3);
        assert!(matches!(
            triangle().degree(3),
            Err(Error::NodeOutOfRange { node: 3, node_count: 3 })
        ));
    }

    #[test]
    fn build_repairs_input() {
        let (g, repairs) =
            Graph::build(3, [(0, 1), (1, 0), (2, 2), (1, 2), (1, 2)], None).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(
            repairs,
            EdgeRepairs {
                duplicate_edges: 2,
                self_loops: 1
            }
        );
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn components_are_ranked_by_size() {
        let g = Graph::from_edges(7, [(0, 1), (2, 3), (3, 4), (5, 6)]).unwrap();
        let parts = g.connected_components();
        assert_eq!(parts.component_sizes, vec![3, 2, 2]);
        assert_eq!(parts.component_id, vec![1, 1, 0, 0, 0, 2, 2]);
        assert_eq!(triangle().connected_components().component_sizes, vec![3]);
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.connected_components().component_sizes, vec![2, 2]);
    }

    #[test]
    fn induced_subgraph_cases() {
        let (sub, map) = triangle().induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(sub.node_count(), 2);
        assert_eq!(sub.edge_count(), 1);
        assert_eq!(map.to_new(2), None);
        assert_eq!(map.to_old(1), 1);

        let (all, _) = triangle().induced_subgraph(&[2, 0, 1]).unwrap();
        assert!(all.same_structure(&triangle()));
        assert!(triangle().induced_subgraph(&[5]).is_err());
    }

    #[test]
    fn remove_hub_isolates_leaves() {
        let (g, map) = star(3).remove_nodes(&[0]).unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.isolated_count(), 3);
        assert_eq!(g.label(0), "1");
        assert_eq!(map.kept(), &[1, 2, 3]);

        let (same, _) = star(3).remove_nodes(&[]).unwrap();
        assert!(same.same_structure(&star(3)));
    }

    #[test]
    fn labels_must_match_and_be_distinct() {
        assert!(triangle().with_labels(vec!["a".into(), "b".into()]).is_err());
        assert!(triangle()
            .with_labels(vec!["a".into(), "a".into(), "c".into()])
            .is_err());
        let g = triangle()
            .with_labels(vec!["x".into(), "y".into(), "z".into()])
            .unwrap();
        assert_eq!(g.label(2), "z");
    }
}
