//! Searches the frontier of the digit classifier and writes the archive and one SVG per pair.
//!
//! cargo run --release --example explore_digits -- [hq|lq] [out_dir]

use std::path::PathBuf;

use frontier_core::digit::DigitDomain;
use frontier_core::report::{export_archive, radius_report, render_frontier, DomainKind, RunConfig, RunMetadata};
use frontier_core::search::run_search;
use frontier_core::Quality;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let preset: Quality = args.next().as_deref().unwrap_or("hq").parse()?;
    let out = PathBuf::from(args.next().unwrap_or_else(|| "digit-frontier".into()));

    let mut config = RunConfig::defaults(DomainKind::Digit);
    config.preset = preset;
    config.search.popsize = 25;
    config.search.g_max = 150;
    let domain = DigitDomain::from_preset(preset)?;
    println!("{} usable seeds", domain.seed_pool().len());

    let run = run_search(&config.search, &domain)?;
    println!("archive: {} pairs after {} generations", run.archive.len(), run.generations);
    if run.archive.is_empty() {
        return Ok(());
    }
    let radius = radius_report(&run.archive, &domain)?;
    println!("inner radius {:.2}, outer radius {:.2}", radius.inner_radius, radius.outer_radius);

    let metadata = RunMetadata {
        preset,
        config: config.search.clone(),
        domain_config: config.domain_json(),
        rng_seed: config.search.rng_seed,
        generations: run.generations,
        timing: None,
    };
    export_archive(&run.archive, metadata, &out.join("archive.json"))?;
    let files = render_frontier(&run.archive, &domain, &out.join("svg"))?;
    println!("wrote {} and {} SVG files", out.join("archive.json").display(), files.len());
    Ok(())
}
