//! Generate a hub-dominated overlay and write it as an edge list.
//!
//! ```text
//! cargo run --release -p p2ptopo --example synthetic_topology -- [seed] [bias] > edges.txt
//! ```
//!
//! Without arguments this is the calibrated preset with seed 0. Passing a
//! bias keeps the relay tier; set it through `SyntheticConfig::with_relays`
//! to turn it off.

use p2ptopo::edgelist::serialize_edge_list;
use p2ptopo::netgen::{generate, SyntheticConfig};

fn main() -> p2ptopo::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    let mut config = SyntheticConfig::calibrated(seed);
    if let Some(bias) = args.next().and_then(|s| s.parse().ok()) {
        config.bias = bias;
    }
    let net = generate(&config)?;
    eprintln!(
        "n={} s={} d_out={} bias={} seed={}: {} edges, {} relays, supers {:?}",
        config.n,
        config.s,
        config.d_out,
        config.bias,
        config.seed,
        net.graph.edge_count(),
        net.relays.len(),
        net.planted_supers
    );
    print!("{}", serialize_edge_list(&net.graph));
    Ok(())
}
