use serde::{Deserialize, Serialize};

use super::SearchError;

/// Parameters of one search run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchConfig {
    pub popsize: usize,
    pub g_max: usize,
    /// Weight of the within-pair distance in the quality fitness.
    pub k: f64,
    pub threshold_ta: f64,
    pub mutation_lb: f64,
    pub mutation_ub: f64,
    /// Upper bound on individuals replaced per repopulation.
    pub repop_ub: usize,
    #[serde(default = "default_retry_cap")]
    pub mutation_retry_cap: usize,
    #[serde(default)]
    pub rng_seed: u64,
    /// Sparseness used while the archive is empty; `10 * threshold_ta` when unset.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub empty_archive_sparseness: Option<f64>,
    /// Seeds requested from the domain; `popsize` when unset.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed_count: Option<usize>,
    /// Evaluate members on the rayon pool.
    #[serde(default = "default_parallel")]
    pub parallel: bool,
}

fn default_retry_cap() -> usize {
    50
}

fn default_parallel() -> bool {
    true
}

impl SearchConfig {
    pub fn digit_defaults() -> Self {
        Self {
            popsize: 100,
            g_max: 4000,
            k: 0.1,
            threshold_ta: 4.0,
            mutation_lb: 0.01,
            mutation_ub: 0.6,
            repop_ub: 10,
            mutation_retry_cap: default_retry_cap(),
            rng_seed: 0,
            empty_archive_sparseness: None,
            seed_count: None,
            parallel: true,
        }
    }

    pub fn road_defaults() -> Self {
        Self {
            popsize: 12,
            g_max: 100,
            k: 0.01,
            // rescaled to the units of the turning-angle edit distance
            threshold_ta: 4.0,
            mutation_lb: 1.0,
            mutation_ub: 6.0,
            repop_ub: 2,
            ..Self::digit_defaults()
        }
    }

    pub fn empty_archive_sparseness(&self) -> f64 {
        self.empty_archive_sparseness.unwrap_or(10.0 * self.threshold_ta)
    }

    pub fn seed_count(&self) -> usize {
        self.seed_count.unwrap_or(self.popsize)
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        let fail = |msg: &str| Err(SearchError::InvalidConfig(msg.to_string()));
        if self.popsize == 0 {
            return fail("popsize must be positive");
        }
        if !(self.k >= 0.0 && self.k.is_finite()) {
            return fail("k must be a nonnegative number");
        }
        if !(self.threshold_ta >= 0.0 && self.threshold_ta.is_finite()) {
            return fail("threshold_ta must be a nonnegative number");
        }
        if !(self.mutation_lb > 0.0 && self.mutation_lb <= self.mutation_ub && self.mutation_ub.is_finite()) {
            return fail("mutation bounds must satisfy 0 < mutation_lb <= mutation_ub");
        }
        if self.repop_ub == 0 || self.repop_ub > self.popsize {
            return fail("repop_ub must lie in 1..=popsize");
        }
        if self.mutation_retry_cap == 0 {
            return fail("mutation_retry_cap must be positive");
        }
        if self.empty_archive_sparseness.is_some_and(|s| !(s >= 0.0 && s.is_finite())) {
            return fail("empty_archive_sparseness must be a nonnegative number");
        }
        if self.seed_count == Some(0) {
            return fail("seed_count must be positive");
        }
        Ok(())
    }
}
