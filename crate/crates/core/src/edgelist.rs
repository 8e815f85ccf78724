//! Whitespace-separated edge-list text format.
//!
//! One `u v` pair per line, `#` starts a comment line, blank lines are
//! skipped. Identifiers are arbitrary tokens and are mapped to dense ids in
//! order of first appearance. The serializer writes a `#` header followed by
//! one `label_u label_v` line per edge with `label_u <= label_v`, lines sorted.
//! Isolated nodes have no line to live on and are not written.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeRepairs, Graph};

#[derive(Debug, Clone)]
pub struct ParsedEdgeList {
    pub graph: Graph,
    pub repairs: EdgeRepairs,
}

pub fn parse_edge_list(text: &str) -> Result<ParsedEdgeList> {
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: idx + 1,
                found: tokens.len(),
            });
        }
        let mut pair = [0usize; 2];
        for (slot, token) in pair.iter_mut().zip(tokens) {
            *slot = *ids.entry(token).or_insert_with(|| {
                labels.push(token.to_owned());
                labels.len() - 1
            });
        }
        let [u, v] = pair;
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let (graph, repairs) = Graph::build(labels.len(), edges, Some(labels))?;
    Ok(ParsedEdgeList { graph, repairs })
}

/// Canonical text form: one `a b` line per edge with `a <= b`, lines sorted.
/// Isolated nodes cannot be written, so the header counts only the nodes
/// that appear.
pub fn serialize_edge_list(graph: &Graph) -> String {
    let mut lines: Vec<String> = graph
        .edges()
        .map(|(u, v)| {
            let (a, b) = (graph.label(u), graph.label(v));
            if a <= b {
                format!("{a} {b}")
            } else {
                format!("{b} {a}")
            }
        })
        .collect();
    lines.sort_unstable();
    let mut out = format!(
        "# nodes {} edges {}\n",
        graph.node_count() - graph.isolated_count(),
        graph.edge_count()
    );
    for line in lines {
        out.push_str(&line);
        out.push('\n');
    }
    out
}
