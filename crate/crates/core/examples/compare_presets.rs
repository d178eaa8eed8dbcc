//! Runs both lane keepers on shared seeds and tabulates their frontiers.
//!
//! cargo run --release --example compare_presets -- [runs]

use frontier_core::report::{compare_presets, comparison_table};
use frontier_core::road::{RoadDomain, RoadDomainConfig, MIN_RADIUS_15_MPH};
use frontier_core::search::SearchConfig;
use frontier_core::Quality;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let runs: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    let hq = RoadDomain::new(RoadDomainConfig::with_preset(Quality::High))?;
    let lq = RoadDomain::new(RoadDomainConfig::with_preset(Quality::Low))?;
    let config = SearchConfig::road_defaults();

    let cmp = compare_presets(&hq, &lq, &config, runs, 1, MIN_RADIUS_15_MPH)?;
    for p in &cmp.runs {
        println!(
            "seed {}: hq {} pairs ({:.1} s), lq {} pairs ({:.1} s)",
            p.rng_seed,
            p.hq_summary.archive_size,
            p.hq_summary.wall_time_s,
            p.lq_summary.archive_size,
            p.lq_summary.wall_time_s
        );
    }
    print!("\n{}", comparison_table(cmp.domain, &cmp.hq, &cmp.lq));
    Ok(())
}
