//! Frontier search: NSGA-II over input pairs with a novelty archive.

mod archive;
mod config;
mod domain;
mod engine;
mod fitness;
mod individual;
mod nsga;

use thiserror::Error;

pub use archive::{Archive, ArchiveEntry, ArchiveEvent, EventKind};
pub use config::SearchConfig;
pub use domain::Domain;
pub use engine::{initialize_population, run_search, run_search_with_seeds, Search, SearchRun};
pub use fitness::{fitness_frontier, fitness_quality, quality_from_parts, sparseness};
pub use individual::{individual_distance, Individual, Member};
pub use nsga::{
    assign_rank_and_crowding, crowding_and_select, crowding_distances, dominates, nondominated_sort, objectives,
    repopulation_victims, tournament_offspring, tournament_winner,
};

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("no seeds available")]
    NoSeeds,
    #[error("seed generation failed: {0}")]
    SeedGeneration(String),
    #[error("seed {index} violates the domain constraints")]
    InvalidSeed { index: usize },
    #[error("seed {index} does not behave (eval {eval})")]
    MisbehavingSeed { index: usize, eval: f64 },
    #[error("no valid mutant of seed {seed} after {attempts} attempts")]
    MutationExhausted { seed: usize, attempts: usize },
}
