use log::{debug, info, warn};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::archive::Archive;
use super::config::SearchConfig;
use super::domain::Domain;
use super::fitness::{fitness_frontier, quality_from_parts, sparseness};
use super::individual::{Individual, Member};
use super::nsga::{crowding_and_select, repopulation_victims, tournament_offspring};
use super::SearchError;

/// Result of a search: the archive plus the state it was found in.
pub struct SearchRun<D: Domain> {
    pub archive: Archive<D>,
    pub population: Vec<Individual<D>>,
    pub seeds: Vec<D::Model>,
    pub generations: usize,
    /// Offspring left unmutated because every retry produced an invalid or duplicate input.
    pub skipped_mutations: usize,
}

/// Runs the search, drawing seeds from the domain first.
pub fn run_search<D: Domain>(config: &SearchConfig, domain: &D) -> Result<SearchRun<D>, SearchError> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.rng_seed);
    let seeds = domain.generate_seeds(config.seed_count(), &mut rng).map_err(SearchError::SeedGeneration)?;
    run_search_with_seeds(config, domain, seeds)
}

/// Runs the search from the given seeds. The evolutionary draws come from their own stream of
/// `rng_seed`, so two runs sharing seeds and `rng_seed` make identical random choices.
pub fn run_search_with_seeds<D: Domain>(
    config: &SearchConfig,
    domain: &D,
    seeds: Vec<D::Model>,
) -> Result<SearchRun<D>, SearchError> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.rng_seed);
    rng.set_stream(1);
    let mut engine = Search::new(config, domain, rng);
    let seed_members = engine.seed_members(&seeds)?;
    let mut pop = engine.initialize_population(&seed_members)?;

    engine.evaluate(&mut pop);
    engine.update_archive(&pop);
    pop = crowding_and_select(pop, config.popsize);

    for generation in 1..=config.g_max {
        engine.generation = generation;
        let mut offspring = tournament_offspring(&pop, config.popsize, &mut engine.rng);
        for x in &mut offspring {
            engine.mutate_offspring(x);
        }
        engine.repopulate(&mut pop, &seed_members);
        pop.append(&mut offspring);
        engine.evaluate(&mut pop);
        engine.update_archive(&pop);
        pop = crowding_and_select(pop, config.popsize);
        debug!(
            "generation {generation}: archive {} best f2 {:.4}",
            engine.archive.len(),
            pop.iter().map(|x| x.f2).fold(f64::INFINITY, f64::min)
        );
    }
    info!(
        "search finished: {} generations, archive of {}, {} skipped mutations",
        config.g_max,
        engine.archive.len(),
        engine.skipped
    );
    Ok(SearchRun {
        archive: engine.archive,
        population: pop,
        seeds,
        generations: config.g_max,
        skipped_mutations: engine.skipped,
    })
}

/// Builds `popsize` individuals, assigning seeds round-robin; `m2` is a mutated copy of `m1`.
pub fn initialize_population<D: Domain>(
    config: &SearchConfig,
    domain: &D,
    seeds: &[D::Model],
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Individual<D>>, SearchError> {
    let mut engine = Search::new(config, domain, rng.clone());
    let members = engine.seed_members(seeds)?;
    let pop = engine.initialize_population(&members)?;
    *rng = engine.rng;
    Ok(pop)
}

/// Algorithm state, exposed so callers can drive the loop one stage at a time.
pub struct Search<'a, D: Domain> {
    config: &'a SearchConfig,
    domain: &'a D,
    rng: ChaCha8Rng,
    archive: Archive<D>,
    next_id: u64,
    generation: usize,
    skipped: usize,
}

impl<'a, D: Domain> Search<'a, D> {
    pub fn new(config: &'a SearchConfig, domain: &'a D, rng: ChaCha8Rng) -> Self {
        Self { config, domain, rng, archive: Archive::new(config.threshold_ta), next_id: 0, generation: 0, skipped: 0 }
    }

    pub fn archive(&self) -> &Archive<D> {
        &self.archive
    }

    pub fn into_archive(self) -> Archive<D> {
        self.archive
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn set_generation(&mut self, generation: usize) {
        self.generation = generation;
    }

    pub fn skipped_mutations(&self) -> usize {
        self.skipped
    }

    fn fresh_id(&mut self) -> u64 {
        self.next_id += 1;
        self.next_id
    }

    /// Concretizes and evaluates the seeds; every seed must behave.
    pub fn seed_members(&mut self, seeds: &[D::Model]) -> Result<Vec<Member<D>>, SearchError> {
        if seeds.is_empty() {
            return Err(SearchError::NoSeeds);
        }
        let mut members = Vec::with_capacity(seeds.len());
        for (index, model) in seeds.iter().enumerate() {
            let id = self.fresh_id();
            let m = Member::new(self.domain, id, model.clone()).ok_or(SearchError::InvalidSeed { index })?;
            members.push(m);
        }
        self.for_each(&mut members, |m, domain| {
            m.evaluate(domain);
        });
        for (index, m) in members.iter().enumerate() {
            let eval = m.eval().expect("seed evaluated");
            if eval <= 0.0 {
                return Err(SearchError::MisbehavingSeed { index, eval });
            }
        }
        Ok(members)
    }

    /// `popsize` individuals over the seeds, round-robin.
    pub fn initialize_population(&mut self, seeds: &[Member<D>]) -> Result<Vec<Individual<D>>, SearchError> {
        (0..self.config.popsize)
            .map(|i| {
                let seed_id = i % seeds.len();
                self.seeded_individual(seeds, seed_id)
                    .ok_or(SearchError::MutationExhausted { seed: seed_id, attempts: self.config.mutation_retry_cap })
            })
            .collect()
    }

    fn seeded_individual(&mut self, seeds: &[Member<D>], seed_id: usize) -> Option<Individual<D>> {
        let seed = &seeds[seed_id];
        let m2 = self.mutant(seed, seed)?;
        let m1 = seed.copy_as(self.fresh_id());
        let id = self.fresh_id();
        Some(Individual::new(id, m1, m2, seed_id))
    }

    /// A valid mutation of `parent` that differs from both `parent` and `sibling`.
    fn mutant(&mut self, parent: &Member<D>, sibling: &Member<D>) -> Option<Member<D>> {
        let (lb, ub) = (self.config.mutation_lb, self.config.mutation_ub);
        for _ in 0..self.config.mutation_retry_cap {
            let model = self.domain.mutate(&parent.model, &mut self.rng, lb, ub);
            let id = self.next_id + 1;
            let Some(m) = Member::new(self.domain, id, model) else { continue };
            let differs = |other: &Member<D>| self.domain.distance(m.concrete(), other.concrete()) > 0.0;
            if differs(parent) && differs(sibling) {
                self.next_id = id;
                return Some(m);
            }
        }
        None
    }

    /// Gives an offspring copy fresh ids and mutates one of its members, chosen uniformly.
    pub fn mutate_offspring(&mut self, x: &mut Individual<D>) {
        x.id = self.fresh_id();
        x.m1 = x.m1.copy_as(self.fresh_id());
        x.m2 = x.m2.copy_as(self.fresh_id());
        let first = self.rng.gen_bool(0.5);
        let (target, sibling) = if first { (&x.m1, &x.m2) } else { (&x.m2, &x.m1) };
        match self.mutant(target, sibling) {
            Some(m) if first => x.m1 = m,
            Some(m) => x.m2 = m,
            None => {
                self.skipped += 1;
                warn!(
                    "generation {}: no valid distinct mutant of member {} after {} attempts, offspring kept unmutated",
                    self.generation, target.id, self.config.mutation_retry_cap
                );
            }
        }
    }

    /// Replaces between 1 and `repop_ub` of the worst individuals with fresh seed-derived ones,
    /// preferring seeds without an archived descendant. Returns the replaced positions.
    pub fn repopulate(&mut self, pop: &mut [Individual<D>], seeds: &[Member<D>]) -> Vec<usize> {
        let n = self.rng.gen_range(1..=self.config.repop_ub);
        let victims = repopulation_victims(pop, n, &mut self.rng);
        let unused: Vec<usize> = (0..seeds.len()).filter(|&s| !self.archive.has_seed(s)).collect();
        let mut replaced = Vec::with_capacity(victims.len());
        for v in victims {
            let seed_id = if unused.is_empty() {
                self.rng.gen_range(0..seeds.len())
            } else {
                *unused.choose(&mut self.rng).expect("nonempty")
            };
            match self.seeded_individual(seeds, seed_id) {
                Some(fresh) => {
                    pop[v] = fresh;
                    replaced.push(v);
                }
                None => warn!("generation {}: could not repopulate from seed {seed_id}", self.generation),
            }
        }
        replaced
    }

    fn for_each<T: Send>(&self, items: &mut [T], f: impl Fn(&mut T, &D) + Sync + Send) {
        let domain = self.domain;
        if self.config.parallel {
            items.par_iter_mut().for_each(|x| f(x, domain));
        } else {
            items.iter_mut().for_each(|x| f(x, domain));
        }
    }

    /// Evals, then both fitness values against the current archive.
    pub fn evaluate(&self, pop: &mut [Individual<D>]) {
        let archive = &self.archive;
        let k = self.config.k;
        let empty = self.config.empty_archive_sparseness();
        self.for_each(pop, |x, domain| {
            let (a, b) = x.evaluate(domain);
            x.f2 = fitness_frontier(a, b);
            x.f1 = quality_from_parts(sparseness(domain, x, archive, empty), x.spread(domain), k);
        });
    }

    /// Offers every individual to the archive, in order.
    pub fn update_archive(&mut self, pop: &[Individual<D>]) {
        for x in pop {
            self.archive.offer(self.domain, x, self.generation);
        }
    }
}
