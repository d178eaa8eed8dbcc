//! Searches the frontier of one lane keeper and prints each archived pair.
//!
//! cargo run --release --example explore_roads -- [hq|lq] [rng_seed]

use frontier_core::road::{RoadDomain, RoadDomainConfig, MIN_RADIUS_15_MPH};
use frontier_core::search::{run_search, SearchConfig};
use frontier_core::Quality;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let preset: Quality = args.next().as_deref().unwrap_or("lq").parse()?;
    let mut config = SearchConfig::road_defaults();
    config.rng_seed = args.next().map(|s| s.parse()).transpose()?.unwrap_or(1);

    let domain = RoadDomain::new(RoadDomainConfig::with_preset(preset))?;
    let run = run_search(&config, &domain)?;
    println!("{preset}: {} pairs in the archive, {} mutations skipped", run.archive.len(), run.skipped_mutations);
    for e in run.archive.entries() {
        let x = &e.individual;
        let (inside, outside) = x.evals().unwrap_or_default();
        let radius = x.m2.concrete().min_curvature_radius();
        println!(
            "gen {:3}  eval {inside:+.3} / {outside:+.3}  outer length {:5.1} m  min radius {radius:6.2} m  {}",
            e.generation,
            x.m2.concrete().geometry.length(),
            if radius >= MIN_RADIUS_15_MPH { "valid" } else { "invalid" }
        );
    }
    println!("\nevent log:\n{}", run.archive.event_log());
    Ok(())
}
