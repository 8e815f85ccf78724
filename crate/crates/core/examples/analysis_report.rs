//! Build the versioned JSON analysis report and print it.
//!
//! ```text
//! cargo run --release -p p2ptopo --example analysis_report [edges.txt] [--lcc]
//! ```

use p2ptopo::edgelist::parse_edge_list;
use p2ptopo::netgen::{generate, SyntheticConfig};
use p2ptopo::report::{analysis_report, to_json, AnalysisParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let lcc = args.iter().any(|a| a == "--lcc");
    let g = match args.iter().find(|a| !a.starts_with("--")) {
        Some(path) => parse_edge_list(&std::fs::read_to_string(path)?)?.graph,
        None => generate(&SyntheticConfig::calibrated(0))?.graph,
    };
    let top_n = g.node_count().min(14);
    let report = analysis_report(&g, &AnalysisParams { top_n, k: None, lcc })?;
    eprintln!(
        "k_max {} core {} coverage {} assortativity {:?}",
        report.kcore.k_max,
        report.kcore.core_size,
        report.superpeers.coverage_fraction.0,
        report.degree_correlation.assortativity.map(|r| r.0)
    );
    print!("{}", to_json(&report));
    Ok(())
}
