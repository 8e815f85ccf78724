//! Parse an edge list, report what was repaired, and print the canonical form.
//!
//! ```text
//! cargo run -p p2ptopo --example parse_and_inspect [edges.txt]
//! ```

use p2ptopo::edgelist::{parse_edge_list, serialize_edge_list};

const SAMPLE: &str = "\
# peers seen by a crawler, one connection per line
alice bob
bob alice
alice carol
carol dave
dave dave
erin frank
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => SAMPLE.to_string(),
    };
    let parsed = parse_edge_list(&text)?;
    let g = &parsed.graph;
    println!("nodes {} edges {}", g.node_count(), g.edge_count());
    println!(
        "repairs: {} duplicate edges, {} self-loops",
        parsed.repairs.duplicate_edges, parsed.repairs.self_loops
    );

    let parts = g.connected_components();
    println!("components {} (sizes {:?})", parts.count(), parts.component_sizes);
    for v in (0..g.node_count()).take(10) {
        let names: Vec<_> = g.neighbors(v).iter().map(|&u| g.label(u)).collect();
        println!("  {:>8} deg {:>3} -> {}", g.label(v), names.len(), names.join(" "));
    }

    print!("\ncanonical form:\n{}", serialize_edge_list(g));
    Ok(())
}
