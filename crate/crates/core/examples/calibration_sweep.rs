//! Sweep the super-peer bias of the synthetic generator and print the
//! statistics the calibrated preset is tuned against. `stranded` counts
//! nodes left isolated once the planted supers are removed; removing random
//! ordinary nodes almost never isolates anything, so a zero there means the
//! two removals tie.
//!
//! ```text
//! cargo run --release -p p2ptopo --example calibration_sweep
//! cargo run --release -p p2ptopo --example calibration_sweep -- 10 0.0
//! ```
//!
//! Arguments: seeds per bias (default 5) and relay fraction (default the
//! calibrated 0.035; pass 0 for the plain two-population model).

use p2ptopo::netgen::{
    generate, measure, SyntheticConfig, CALIBRATED_RELAY_FRACTION, CALIBRATED_RELAY_LINKS,
};

fn main() -> p2ptopo::Result<()> {
    let mut args = std::env::args().skip(1);
    let seeds: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let relay_fraction: f64 = args
        .next()
        .and_then(|s| s.parse().ok())
        .unwrap_or(CALIBRATED_RELAY_FRACTION);

    println!("relay_fraction = {relay_fraction}, relay_links = {CALIBRATED_RELAY_LINKS}, {seeds} seeds per bias");
    println!(
        "{:>5} {:>8} {:>8} {:>6} {:>9} {:>8} {:>8} {:>7} {:>9}",
        "bias", "assort", "cover", "k_max", "core_size", "knn_rho", "knn_p", "band", "stranded"
    );
    for step in 0..=6 {
        let bias = 0.35 + 0.05 * step as f64;
        for seed in 0..seeds {
            let mut config = SyntheticConfig::calibrated(seed).with_relays(relay_fraction, CALIBRATED_RELAY_LINKS);
            config.bias = bias;
            let m = measure(&generate(&config)?);
            let (rho, p) = m
                .knn_decay
                .map_or((f64::NAN, f64::NAN), |r| (r.rho, r.p_value));
            println!(
                "{:>5.2} {:>8.3} {:>8.3} {:>6} {:>9} {:>8.3} {:>8.1e} {:>7.3} {:>9}",
                bias,
                m.assortativity.unwrap_or(f64::NAN),
                m.coverage_fraction,
                m.k_max,
                m.k_max_core_size,
                rho,
                p,
                m.modal_band_fraction,
                m.isolated_after_super_removal
            );
        }
    }
    Ok(())
}
