//! Genetic algorithm over rule consequents.
//!
//! A chromosome is the consequent vector of a rule grid. Candidates are scored
//! by replaying the last few simulated time units under their rules and
//! counting handoff initiations and cut connections.

mod chromosome;
mod config;
mod fitness;
mod history;
mod operators;

pub use chromosome::{Chromosome, MAX_GENE};
pub use config::{EvolverConfig, FitnessMode};
pub use fitness::{event_counts, fitness, EventCounts, FitnessContext};
pub use history::HistoryWindow;
pub use operators::{
    init_population, mutate_random_reset, one_point_crossover, one_point_crossover_at,
    tournament_select,
};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

/// Deterministic random stream. The same `(seed, stream)` pair always yields
/// the same draws.
pub type RngStream = ChaCha8Rng;

pub fn rng_stream(seed: u64, stream: u64) -> RngStream {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

#[derive(Debug, Error)]
pub enum EvolverError {
    #[error("history window is empty")]
    EmptyHistory,
    #[error("invalid chromosome: {0}")]
    InvalidChromosome(String),
    #[error("chromosome has {got} genes, rule grid needs {expected}")]
    GeneCount { expected: usize, got: usize },
    #[error("population is empty")]
    EmptyPopulation,
}

/// Result of one GA invocation.
#[derive(Debug, Clone)]
pub struct Evolution {
    pub best: Chromosome,
    pub best_fitness: f64,
    /// Fitness of the initial population's member 0.
    pub seed_fitness: f64,
    /// Best fitness after the initial evaluation and after each generation.
    pub best_per_generation: Vec<f64>,
    /// Final population; index 0 is the elite.
    pub population: Vec<Chromosome>,
}

/// Scores every member; evaluation order does not affect the result.
pub fn evaluate_population(
    pop: &[Chromosome],
    hist: &HistoryWindow,
    ctx: &FitnessContext<'_>,
) -> Result<Vec<f64>, EvolverError> {
    pop.par_iter().map(|c| fitness(c, hist, ctx)).collect()
}

fn argmin(fitnesses: &[f64]) -> usize {
    (0..fitnesses.len())
        .min_by(|&a, &b| fitnesses[a].total_cmp(&fitnesses[b]).then(a.cmp(&b)))
        .expect("non-empty population")
}

/// Runs `generations_per_invocation` generations from `pop`. Each generation
/// keeps the incumbent best unchanged and fills the rest through tournament
/// selection, one-point crossover and random-reset mutation.
pub fn evolve(
    pop: Vec<Chromosome>,
    hist: &HistoryWindow,
    ctx: &FitnessContext<'_>,
    rng: &mut RngStream,
) -> Result<Evolution, EvolverError> {
    if pop.is_empty() {
        return Err(EvolverError::EmptyPopulation);
    }
    if hist.is_empty() {
        return Err(EvolverError::EmptyHistory);
    }
    let cfg = ctx.cfg;
    let size = pop.len();
    let k = cfg.tournament_size.min(size);
    let mut pop = pop;
    let mut fit = evaluate_population(&pop, hist, ctx)?;
    let seed_fitness = fit[0];
    let mut best_per_generation = Vec::with_capacity(cfg.generations_per_invocation + 1);
    best_per_generation.push(fit[argmin(&fit)]);

    for _ in 0..cfg.generations_per_invocation {
        let elite = argmin(&fit);
        let mut next = Vec::with_capacity(size);
        next.push(pop[elite].clone());
        while next.len() < size {
            let a = tournament_select(&fit, k, rng);
            let b = tournament_select(&fit, k, rng);
            let (c1, c2) = one_point_crossover(&pop[a], &pop[b], cfg.crossover_prob, rng);
            next.push(mutate_random_reset(&c1, cfg.mutation_prob, rng));
            if next.len() < size {
                next.push(mutate_random_reset(&c2, cfg.mutation_prob, rng));
            }
        }
        let mut next_fit = evaluate_population(&next[1..], hist, ctx)?;
        next_fit.insert(0, fit[elite]);
        pop = next;
        fit = next_fit;
        best_per_generation.push(fit[argmin(&fit)]);
    }

    let best = argmin(&fit);
    pop.swap(0, best);
    fit.swap(0, best);
    Ok(Evolution {
        best: pop[0].clone(),
        best_fitness: fit[0],
        seed_fitness,
        best_per_generation,
        population: pop,
    })
}
