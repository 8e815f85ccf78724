//! Identify the highest-degree nodes and measure how much of the network they
//! reach directly and how much their neighborhoods overlap.
//!
//! ```text
//! cargo run --release -p p2ptopo --example superpeer_coverage [edges.txt] [top_n]
//! ```

use p2ptopo::edgelist::parse_edge_list;
use p2ptopo::kcore::core_periphery_split;
use p2ptopo::netgen::{generate, SyntheticConfig};
use p2ptopo::superpeer::{
    shared_neighbor_overlap, superpeer_coverage, superpeer_degree_profile, top_degree_nodes,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let g = match args.next() {
        Some(path) => parse_edge_list(&std::fs::read_to_string(path)?)?.graph,
        None => generate(&SyntheticConfig::calibrated(0))?.graph,
    };
    let top_n = args.next().map(|s| s.parse()).transpose()?.unwrap_or(14);

    let supers = top_degree_nodes(&g, top_n)?;
    let coverage = superpeer_coverage(&g, &supers)?;
    println!(
        "{} supers reach {} other nodes; coverage {}/{} = {:.1}%",
        supers.len(),
        coverage.neighbor_only_nodes,
        coverage.coverage_nodes,
        g.node_count(),
        100.0 * coverage.coverage_fraction
    );

    let overlap = shared_neighbor_overlap(&g, &supers)?;
    println!("\n{:>8} {:>6} {:>12}", "super", "degree", "max overlap");
    for (i, &s) in supers.iter().enumerate() {
        let best = overlap.max_off_diagonal[i].map_or("-".to_string(), |m| format!("{m:.3}"));
        println!("{:>8} {:>6} {:>12}", g.label(s), g.neighbors(s).len(), best);
    }

    let core = core_periphery_split(&g, None).core;
    let profile = superpeer_degree_profile(&g, &supers, &core)?;
    let mut by_ksn = vec![0usize; supers.len() + 1];
    for e in &profile {
        by_ksn[e.ksn] += 1;
    }
    println!("\nnodes by number of super neighbors:");
    for (ksn, count) in by_ksn.iter().enumerate().filter(|(_, &c)| c > 0) {
        println!("{ksn:>4} {count:>6}");
    }
    Ok(())
}
