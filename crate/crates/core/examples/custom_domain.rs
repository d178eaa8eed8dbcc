//! Plugs a new domain into the search: thermostat settings against a safety cut-off.
//!
//! The system under test heats a room to `target` degrees and overshoots by a tenth of the gap
//! to the starting temperature. It misbehaves when the peak passes 30 degrees.

use frontier_core::search::{run_search, Domain, SearchConfig};
use rand::{Rng, RngCore};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct Setting {
    start: f64,
    target: f64,
}

struct Thermostat;

impl Domain for Thermostat {
    type Model = Setting;
    type Concrete = f64;

    fn concretize(&self, s: &Setting) -> Option<f64> {
        (s.start >= 0.0 && s.target >= s.start && s.target <= 40.0).then_some(s.target + 0.1 * (s.target - s.start))
    }

    fn evaluate(&self, _: &Setting, peak: &f64) -> f64 {
        30.0 - peak
    }

    fn distance(&self, a: &f64, b: &f64) -> f64 {
        (a - b).abs()
    }

    fn mutate(&self, s: &Setting, rng: &mut dyn RngCore, lb: f64, ub: f64) -> Setting {
        let step = rng.gen_range(lb..=ub) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let mut out = s.clone();
        if rng.gen_bool(0.5) {
            out.start += step;
        } else {
            out.target += step;
        }
        out
    }

    fn generate_seeds(&self, count: usize, rng: &mut dyn RngCore) -> Result<Vec<Setting>, String> {
        Ok((0..count)
            .map(|_| {
                let start = rng.gen_range(5.0..15.0);
                Setting { start, target: rng.gen_range(start..25.0) }
            })
            .collect())
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = SearchConfig {
        popsize: 20,
        g_max: 60,
        k: 0.1,
        threshold_ta: 0.5,
        mutation_lb: 0.1,
        mutation_ub: 2.0,
        repop_ub: 3,
        mutation_retry_cap: 50,
        rng_seed: 4,
        empty_archive_sparseness: None,
        seed_count: None,
        parallel: false,
    };
    let run = run_search(&config, &Thermostat)?;
    println!("{} frontier pairs", run.archive.len());
    for e in run.archive.entries() {
        let x = &e.individual;
        println!(
            "start {:5.2} target {:5.2} (peak {:5.2})  |  start {:5.2} target {:5.2} (peak {:5.2})",
            x.m1.model.start,
            x.m1.model.target,
            x.m1.concrete(),
            x.m2.model.start,
            x.m2.model.target,
            x.m2.concrete()
        );
    }
    Ok(())
}
