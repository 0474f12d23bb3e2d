//! Black widow optimization: procreation via arithmetic crossover,
//! cannibalism-based survivor selection, and single-gene mutation.

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::population::{BestTracker, Individual, Population, RunResult};
use crate::rng::{RandomSource, SeededRng};
use crate::space::SearchSpace;
use serde::{Deserialize, Serialize};

/// Procreating, cannibalism, and mutation rates.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct BwoaRates {
    pub procreating_rate: f64,
    pub cannibalism_rate: f64,
    pub mutation_rate: f64,
}

impl Default for BwoaRates {
    fn default() -> Self {
        Self {
            procreating_rate: 0.6,
            cannibalism_rate: 0.44,
            mutation_rate: 0.4,
        }
    }
}

impl BwoaRates {
    pub fn validate(&self) -> Result<()> {
        if !(self.procreating_rate > 0.0 && self.procreating_rate <= 1.0) {
            return Err(Error::InvalidConfig(format!(
                "procreating_rate {} must lie in (0, 1]",
                self.procreating_rate
            )));
        }
        if !(0.0..1.0).contains(&self.cannibalism_rate) {
            return Err(Error::InvalidConfig(format!(
                "cannibalism_rate {} must lie in [0, 1)",
                self.cannibalism_rate
            )));
        }
        if !(0.0..=1.0).contains(&self.mutation_rate) {
            return Err(Error::InvalidConfig(format!(
                "mutation_rate {} must lie in [0, 1]",
                self.mutation_rate
            )));
        }
        Ok(())
    }
}

/// Checks BWOA preconditions: population of at least 4 (two distinct
/// parents among the best), at least one iteration, rates in range.
pub fn validate(config: &RunConfig, rates: &BwoaRates) -> Result<()> {
    config.validate(4)?;
    rates.validate()
}

/// Arithmetic crossover: `ceil(dim / 2)` rounds, each drawing a fresh
/// per-dimension alpha vector and emitting the complementary pair
/// `y1 = a*x1 + (1-a)*x2`, `y2 = a*x2 + (1-a)*x1`.
///
/// Children are clamped to the box and returned unevaluated.
pub fn procreate(
    parent1: &Individual,
    parent2: &Individual,
    space: &SearchSpace,
    rng: &mut dyn RandomSource,
) -> Vec<Individual> {
    let dim = space.dim();
    let rounds = dim.div_ceil(2);
    let mut children = Vec::with_capacity(rounds * 2);
    for _ in 0..rounds {
        let mut y1 = Vec::with_capacity(dim);
        let mut y2 = Vec::with_capacity(dim);
        for (&x1, &x2) in parent1.position.iter().zip(&parent2.position) {
            let a = rng.uniform();
            y1.push(a * x1 + (1.0 - a) * x2);
            y2.push(a * x2 + (1.0 - a) * x1);
        }
        space.clamp(&mut y1);
        space.clamp(&mut y2);
        children.push(Individual::unevaluated(y1));
        children.push(Individual::unevaluated(y2));
    }
    children
}

/// Sorts by fitness and keeps the best `ceil((1 - rate) * n)` members,
/// never fewer than one. The discarded members are the worst.
pub fn cannibalize(mut batch: Population, cannibalism_rate: f64) -> Population {
    assert!(!batch.is_empty(), "cannot cannibalize an empty population");
    batch.sort_by_fitness();
    let n = batch.len();
    let keep = (((1.0 - cannibalism_rate) * n as f64).ceil() as usize).clamp(1, n);
    batch.members.truncate(keep);
    batch
}

/// Replaces one uniformly chosen coordinate with a fresh uniform draw from
/// that dimension's bound interval. Returned unevaluated.
pub fn mutate_member(
    x: &Individual,
    space: &SearchSpace,
    rng: &mut dyn RandomSource,
) -> Individual {
    let d = rng.index(space.dim());
    let mut position = x.position.clone();
    position[d] = rng.range(space.lb()[d], space.ub()[d]);
    Individual::unevaluated(position)
}

/// Runs the full loop with a stream seeded from `config.seed`.
pub fn run(
    objective: &dyn Objective,
    space: &SearchSpace,
    config: &RunConfig,
    rates: &BwoaRates,
) -> Result<RunResult> {
    let mut rng = SeededRng::new(config.seed);
    run_with_rng(objective, space, config, rates, &mut rng)
}

/// Runs the full loop against a caller-supplied stream.
///
/// Each iteration: the best `ceil(procreating_rate * pop)` members form the
/// parent pool; `nr = round(procreating_rate * pop / 2)` pairings each
/// produce a crossover brood thinned by sibling cannibalism; `nm =
/// round(mutation_rate * pop)` mutants are drawn from the pool; the next
/// generation is the best `pop` of broods, mutants, and the retained global
/// best, topped up from the current generation if those fall short.
pub fn run_with_rng(
    objective: &dyn Objective,
    space: &SearchSpace,
    config: &RunConfig,
    rates: &BwoaRates,
    rng: &mut dyn RandomSource,
) -> Result<RunResult> {
    validate(config, rates)?;

    let pop_size = config.pop;
    let nr = (rates.procreating_rate * pop_size as f64 / 2.0).round() as usize;
    let nm = (rates.mutation_rate * pop_size as f64).round() as usize;
    let pool_len = ((rates.procreating_rate * pop_size as f64).ceil() as usize).clamp(2, pop_size);

    let mut population = init_uniform(space, pop_size, rng);
    population.evaluate_and_sort(objective, rng);

    let mut tracker = BestTracker::new(config.max_iter);
    tracker.observe(&population);

    for t in 0..config.max_iter {
        let pool = &population.members[..pool_len];

        let mut candidates: Vec<Individual> = Vec::new();
        for _ in 0..nr {
            let i = rng.index(pool_len);
            let mut j = rng.index(pool_len);
            while j == i {
                j = rng.index(pool_len);
            }
            let mut brood = Population {
                members: procreate(&pool[i], &pool[j], space, rng),
            };
            for child in &mut brood.members {
                child.evaluate(objective, rng);
            }
            let survivors = cannibalize(brood, rates.cannibalism_rate);
            candidates.extend(survivors.members);
        }

        for _ in 0..nm {
            let i = rng.index(pool_len);
            let mut mutant = mutate_member(&pool[i], space, rng);
            mutant.evaluate(objective, rng);
            candidates.push(mutant);
        }

        candidates.push(tracker.as_individual());
        if candidates.len() < pop_size {
            // Degenerate rates can under-produce; keep the census constant
            // by carrying over current members.
            candidates.extend(population.members.iter().cloned());
        }

        let mut next = Population {
            members: candidates,
        };
        next.sort_by_fitness();
        next.members.truncate(pop_size);
        population = next;

        assert_eq!(population.len(), pop_size);
        tracker.record(&population, t);
    }

    Ok(tracker.into_result())
}

/// Uniform random positions inside the box, one draw per coordinate.
fn init_uniform(space: &SearchSpace, pop: usize, rng: &mut dyn RandomSource) -> Population {
    let positions = (0..pop)
        .map(|_| {
            (0..space.dim())
                .map(|d| rng.range(space.lb()[d], space.ub()[d]))
                .collect()
        })
        .collect();
    Population::from_positions(positions)
}
