use super::archive::Archive;
use super::domain::Domain;
use super::individual::{individual_distance, Individual};

/// `eval1 * eval2` when the product is positive, otherwise -1. Lower is closer to the frontier.
pub fn fitness_frontier(eval1: f64, eval2: f64) -> f64 {
    let p = eval1 * eval2;
    if p > 0.0 {
        p
    } else {
        -1.0
    }
}

/// Minimum individual distance from `x` to the archive entries, or `empty` for an empty archive.
pub fn sparseness<D: Domain>(domain: &D, x: &Individual<D>, archive: &Archive<D>, empty: f64) -> f64 {
    archive.entries().iter().map(|e| individual_distance(domain, x, &e.individual)).reduce(f64::min).unwrap_or(empty)
}

/// Sparseness minus `k` times the within-pair distance. Higher is better.
pub fn fitness_quality<D: Domain>(domain: &D, x: &Individual<D>, archive: &Archive<D>, k: f64, empty: f64) -> f64 {
    quality_from_parts(sparseness(domain, x, archive, empty), x.spread(domain), k)
}

pub fn quality_from_parts(sparseness: f64, spread: f64, k: f64) -> f64 {
    sparseness - k * spread
}
