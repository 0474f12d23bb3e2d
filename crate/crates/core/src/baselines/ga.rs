//! Real-coded genetic algorithm: tournament selection, blend crossover,
//! per-gene uniform mutation, and single-member elitism.

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::population::{BestTracker, Individual, Population, RunResult};
use crate::rng::{RandomSource, SeededRng};
use crate::space::SearchSpace;
use serde::{Deserialize, Serialize};

/// GA operator parameters. `mutation_prob` of `None` resolves to `1 / dim`
/// at run time.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct GaParams {
    pub crossover_prob: f64,
    pub mutation_prob: Option<f64>,
    pub tournament_size: usize,
}

impl Default for GaParams {
    fn default() -> Self {
        Self {
            crossover_prob: 0.9,
            mutation_prob: None,
            tournament_size: 2,
        }
    }
}

impl GaParams {
    pub fn validate(&self, pop: usize) -> Result<()> {
        if !(0.0..=1.0).contains(&self.crossover_prob) {
            return Err(Error::InvalidConfig(format!(
                "ga crossover_prob {} must lie in [0, 1]",
                self.crossover_prob
            )));
        }
        if let Some(pm) = self.mutation_prob {
            if !(0.0..=1.0).contains(&pm) {
                return Err(Error::InvalidConfig(format!(
                    "ga mutation_prob {pm} must lie in [0, 1]"
                )));
            }
        }
        if self.tournament_size < 2 || self.tournament_size > pop {
            return Err(Error::InvalidConfig(format!(
                "ga tournament_size {} must lie in [2, pop]",
                self.tournament_size
            )));
        }
        Ok(())
    }
}

/// Checks GA preconditions: even population of at least 4, at least one
/// iteration, operator probabilities in range.
pub fn validate(config: &RunConfig, params: &GaParams) -> Result<()> {
    config.validate(4)?;
    if !config.pop.is_multiple_of(2) {
        return Err(Error::InvalidConfig(format!(
            "ga population size {} must be even",
            config.pop
        )));
    }
    params.validate(config.pop)
}

pub fn run(
    objective: &dyn Objective,
    space: &SearchSpace,
    config: &RunConfig,
    params: &GaParams,
) -> Result<RunResult> {
    let mut rng = SeededRng::new(config.seed);
    run_with_rng(objective, space, config, params, &mut rng)
}

/// Generational loop with elitism of one: the best member survives
/// unchanged, the rest are bred via tournament parents, blend crossover
/// (alpha = 0.5, children drawn interleaved per dimension), and per-gene
/// uniform re-sampling.
pub fn run_with_rng(
    objective: &dyn Objective,
    space: &SearchSpace,
    config: &RunConfig,
    params: &GaParams,
    rng: &mut dyn RandomSource,
) -> Result<RunResult> {
    validate(config, params)?;

    let dim = space.dim();
    let mutation_prob = params.mutation_prob.unwrap_or(1.0 / dim as f64);

    let positions = (0..config.pop)
        .map(|_| {
            (0..dim)
                .map(|d| rng.range(space.lb()[d], space.ub()[d]))
                .collect()
        })
        .collect();
    let mut population = Population::from_positions(positions);
    population.evaluate_and_sort(objective, rng);

    let mut tracker = BestTracker::new(config.max_iter);
    tracker.observe(&population);

    for t in 0..config.max_iter {
        let mut next = vec![population.best().clone()];

        while next.len() < config.pop {
            let p1 = tournament(&population, params.tournament_size, rng);
            let p2 = tournament(&population, params.tournament_size, rng);
            let (mut c1, mut c2) = if rng.uniform() < params.crossover_prob {
                blend_crossover(
                    &population.members[p1].position,
                    &population.members[p2].position,
                    rng,
                )
            } else {
                (
                    population.members[p1].position.clone(),
                    population.members[p2].position.clone(),
                )
            };
            for child in [&mut c1, &mut c2] {
                for (d, gene) in child.iter_mut().enumerate() {
                    if rng.uniform() < mutation_prob {
                        *gene = rng.range(space.lb()[d], space.ub()[d]);
                    }
                }
                space.clamp(child);
            }
            let mut child1 = Individual::unevaluated(c1);
            child1.evaluate(objective, rng);
            next.push(child1);
            if next.len() < config.pop {
                let mut child2 = Individual::unevaluated(c2);
                child2.evaluate(objective, rng);
                next.push(child2);
            }
        }

        population = Population { members: next };
        population.sort_by_fitness();
        assert_eq!(population.len(), config.pop);
        tracker.record(&population, t);
    }

    Ok(tracker.into_result())
}

/// Index of the best of `size` members drawn uniformly with replacement.
fn tournament(pop: &Population, size: usize, rng: &mut dyn RandomSource) -> usize {
    let mut best = rng.index(pop.len());
    for _ in 1..size {
        let challenger = rng.index(pop.len());
        if pop.members[challenger].fitness < pop.members[best].fitness {
            best = challenger;
        }
    }
    best
}

/// Blend crossover with alpha 0.5: each child coordinate is uniform over the
/// parent interval expanded by half its width on both sides.
fn blend_crossover(p1: &[f64], p2: &[f64], rng: &mut dyn RandomSource) -> (Vec<f64>, Vec<f64>) {
    const ALPHA: f64 = 0.5;
    let mut c1 = Vec::with_capacity(p1.len());
    let mut c2 = Vec::with_capacity(p1.len());
    for d in 0..p1.len() {
        let lo = p1[d].min(p2[d]);
        let hi = p1[d].max(p2[d]);
        let spread = hi - lo;
        let (a, b) = (lo - ALPHA * spread, hi + ALPHA * spread);
        c1.push(rng.range(a, b));
        c2.push(rng.range(a, b));
    }
    (c1, c2)
}
