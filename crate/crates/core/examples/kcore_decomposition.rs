//! k-core decomposition of a synthetic overlay: shell sizes, the innermost
//! core, and the resulting core/periphery split.
//!
//! ```text
//! cargo run --release -p p2ptopo --example kcore_decomposition [seed]
//! ```

use p2ptopo::kcore::{core_numbers, k_core_subgraph, split_with};
use p2ptopo::netgen::{generate, SyntheticConfig};

fn main() -> p2ptopo::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let g = generate(&SyntheticConfig::calibrated(seed))?.graph;
    let dec = core_numbers(&g);

    println!("k_max = {}", dec.k_max);
    println!("{:>4} {:>7} {:>9}", "k", "shell", "k-core");
    for (k, &shell) in dec.shell_sizes.iter().enumerate() {
        if shell > 0 {
            println!("{k:>4} {shell:>7} {:>9}", dec.k_core_size(k));
        }
    }

    let (core, _) = k_core_subgraph(&g, dec.k_max)?;
    let min_internal = (0..core.node_count()).map(|v| core.neighbors(v).len()).min().unwrap_or(0);
    println!(
        "\ninnermost core: {} nodes, {} edges, min internal degree {min_internal}",
        core.node_count(),
        core.edge_count()
    );

    let split = split_with(&dec, None);
    let supers_inside = split.core.iter().filter(|&&v| v < 14).count();
    println!(
        "split at k={}: core {} / periphery {}; {supers_inside} of 14 planted supers in the core",
        split.k,
        split.core.len(),
        split.periphery.len()
    );
    Ok(())
}
