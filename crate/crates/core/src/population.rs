//! Individuals, fitness-sorted populations, and run-result bookkeeping.

use crate::objective::{checked_fitness, Objective};
use crate::rng::RandomSource;
use serde::{Deserialize, Serialize};

/// A position vector with its cached objective value.
///
/// Fitness is `+inf` until the individual has been evaluated.
#[derive(Clone, Debug, PartialEq)]
pub struct Individual {
    pub position: Vec<f64>,
    pub fitness: f64,
}

impl Individual {
    /// A not-yet-evaluated candidate.
    pub fn unevaluated(position: Vec<f64>) -> Self {
        Self {
            position,
            fitness: f64::INFINITY,
        }
    }

    pub fn evaluate(&mut self, objective: &dyn Objective, rng: &mut dyn RandomSource) {
        self.fitness = checked_fitness(objective, &self.position, rng);
    }
}

/// Ordered collection of individuals; ascending fitness after sorting.
#[derive(Clone, Debug, Default)]
pub struct Population {
    pub members: Vec<Individual>,
}

impl Population {
    pub fn from_positions(positions: Vec<Vec<f64>>) -> Self {
        Self {
            members: positions.into_iter().map(Individual::unevaluated).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Best (lowest-fitness) member. Requires a sorted population.
    pub fn best(&self) -> &Individual {
        &self.members[0]
    }

    /// Worst member. Requires a sorted population.
    pub fn worst(&self) -> &Individual {
        self.members.last().expect("population is empty")
    }

    /// Stable ascending sort by cached fitness. Ties keep their prior order,
    /// so seeded runs stay fully deterministic.
    pub fn sort_by_fitness(&mut self) {
        self.members.sort_by(|a, b| a.fitness.total_cmp(&b.fitness));
    }

    /// Recomputes every member's fitness, then sorts ascending.
    ///
    /// Non-finite objective values become `+inf` and sort last.
    pub fn evaluate_and_sort(&mut self, objective: &dyn Objective, rng: &mut dyn RandomSource) {
        for member in &mut self.members {
            member.evaluate(objective, rng);
        }
        self.sort_by_fitness();
    }

    pub fn is_sorted(&self) -> bool {
        self.members
            .windows(2)
            .all(|w| w[0].fitness <= w[1].fitness)
    }
}

/// Outcome of one optimizer run: best score, best position, and the
/// per-iteration convergence curve.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub gbest_score: f64,
    pub gbest_position: Vec<f64>,
    pub curve: Vec<f64>,
}

/// Tracks the global best across a run and records the convergence curve.
///
/// The curve stores the post-update global best after each iteration, so it
/// is monotone non-increasing by construction.
#[derive(Clone, Debug)]
pub struct BestTracker {
    score: f64,
    position: Vec<f64>,
    curve: Vec<f64>,
}

impl BestTracker {
    pub fn new(max_iter: usize) -> Self {
        Self {
            score: f64::INFINITY,
            position: Vec::new(),
            curve: Vec::with_capacity(max_iter),
        }
    }

    /// Adopts `position`/`fitness` if it improves on the best seen so far.
    ///
    /// The first offer is always adopted, so a best position exists even
    /// when every evaluation overflowed to `+inf`.
    pub fn offer(&mut self, position: &[f64], fitness: f64) {
        if fitness < self.score || self.position.is_empty() {
            self.score = fitness;
            self.position = position.to_vec();
        }
    }

    /// Offers the best member of a sorted population.
    pub fn observe(&mut self, pop: &Population) {
        debug_assert!(pop.is_sorted());
        let best = pop.best();
        self.offer(&best.position, best.fitness);
    }

    /// Observes the sorted population, then writes `curve[t]`.
    ///
    /// `t` must be the next unrecorded iteration index.
    pub fn record(&mut self, pop: &Population, t: usize) {
        self.observe(pop);
        self.record_value(t);
    }

    /// Writes `curve[t]` from the current best, for optimizers that offer
    /// members one at a time instead of via a sorted population.
    pub fn record_value(&mut self, t: usize) {
        assert_eq!(t, self.curve.len(), "iterations must be recorded in order");
        self.curve.push(self.score);
    }

    pub fn gbest_score(&self) -> f64 {
        self.score
    }

    pub fn gbest_position(&self) -> &[f64] {
        &self.position
    }

    pub fn as_individual(&self) -> Individual {
        Individual {
            position: self.position.clone(),
            fitness: self.score,
        }
    }

    pub fn into_result(self) -> RunResult {
        RunResult {
            gbest_score: self.score,
            gbest_position: self.position,
            curve: self.curve,
        }
    }
}
