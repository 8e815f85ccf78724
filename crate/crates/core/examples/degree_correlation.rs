//! K_nn(k), assortativity and the degree CCDF for an edge list or, without
//! an argument, for a generated network.
//!
//! ```text
//! cargo run --release -p p2ptopo --example degree_correlation [edges.txt]
//! ```

use p2ptopo::correlation::{degree_ccdf, knn_by_degree};
use p2ptopo::edgelist::parse_edge_list;
use p2ptopo::netgen::{generate, SyntheticConfig, KNN_DECAY_RANGE};
use p2ptopo::stats::spearman;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = match std::env::args().nth(1) {
        Some(path) => parse_edge_list(&std::fs::read_to_string(path)?)?.graph,
        None => generate(&SyntheticConfig::calibrated(0))?.graph,
    };
    let table = knn_by_degree(&g);
    match table.assortativity.value() {
        Some(r) => println!("assortativity r = {r:.4}"),
        None => println!("assortativity undefined: {}", table.assortativity.reason().unwrap_or("")),
    }

    println!("\n{:>5} {:>6} {:>10}", "k", "n_k", "K_nn(k)");
    for row in table.rows.iter().take(12) {
        println!("{:>5} {:>6} {:>10.3}", row.k, row.n_k, row.knn);
    }
    if table.rows.len() > 12 {
        println!("  ... {} more rows", table.rows.len() - 12);
    }

    let (lo, hi) = KNN_DECAY_RANGE;
    let (ks, knn): (Vec<f64>, Vec<f64>) = table
        .rows
        .iter()
        .filter(|r| (lo..=hi).contains(&r.k))
        .map(|r| (r.k as f64, r.knn))
        .unzip();
    if let Some(rc) = spearman(&ks, &knn) {
        println!(
            "\nK_nn trend over k in [{lo}, {hi}]: Spearman rho {:.3}, p {:.2e}, {} points",
            rc.rho, rc.p_value, rc.points
        );
    }

    println!("\nP(K >= k):");
    for (k, p) in degree_ccdf(&g).into_iter().filter(|(k, _)| k.is_power_of_two()) {
        println!("{k:>6} {p:.4}");
    }
    Ok(())
}
