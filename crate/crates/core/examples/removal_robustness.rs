//! Compare removing the planted super-peers against removing the same number
//! of random ordinary nodes, over several seeds.
//!
//! ```text
//! cargo run --release -p p2ptopo --example removal_robustness [trials]
//! ```

use p2ptopo::netgen::{generate, SyntheticConfig, TopologyRng};
use p2ptopo::superpeer::removal_robustness;

fn main() -> p2ptopo::Result<()> {
    let trials: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    println!(
        "{:>5} | {:>8} {:>8} | {:>8} {:>8}",
        "seed", "sup iso", "sup lcc", "rnd iso", "rnd lcc"
    );
    let mut wins = 0;
    for seed in 0..trials {
        let net = generate(&SyntheticConfig::calibrated(seed))?;
        let (n, s) = (net.graph.node_count(), net.planted_supers.len());

        let mut rng = TopologyRng::new(seed ^ 0x5eed);
        let mut random = Vec::with_capacity(s);
        while random.len() < s {
            let v = s + rng.below(n - s);
            if !random.contains(&v) {
                random.push(v);
            }
        }

        let targeted = removal_robustness(&net.graph, &net.planted_supers)?;
        let control = removal_robustness(&net.graph, &random)?;
        let (t, c) = (&targeted.after, &control.after);
        if t.isolated_nodes > c.isolated_nodes && t.largest_component < c.largest_component {
            wins += 1;
        }
        println!(
            "{seed:>5} | {:>8} {:>8} | {:>8} {:>8}",
            t.isolated_nodes, t.largest_component, c.isolated_nodes, c.largest_component
        );
    }
    println!("super removal is strictly worse in {wins}/{trials} trials");
    Ok(())
}
