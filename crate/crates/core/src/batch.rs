//! Multi-seed batch execution.
//!
//! A single run is strictly sequential, but runs in a batch are independent
//! (each owns its stream, seeded `base + run_index`), so the batch is
//! data-parallel. With the `parallel` feature (on by default) `run_batch`
//! fans runs out over rayon; results come back in run order either way, so
//! both paths produce identical output.

use crate::baselines::{ga, pso, GaParams, PsoParams};
use crate::bwoa::{self, BwoaRates};
use crate::config::RunConfig;
use crate::error::Result;
use crate::msbwoa::{self, MsbwoaParams};
use crate::objective::Objective;
use crate::population::RunResult;
use crate::space::SearchSpace;
use serde::{Deserialize, Serialize};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// An optimizer together with its parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Msbwoa(MsbwoaParams),
    Bwoa(BwoaRates),
    Pso(PsoParams),
    Ga(GaParams),
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Msbwoa(_) => "msbwoa",
            Self::Bwoa(_) => "bwoa",
            Self::Pso(_) => "pso",
            Self::Ga(_) => "ga",
        }
    }

    /// Checks the run configuration against this optimizer's preconditions
    /// without evaluating anything.
    pub fn validate(&self, config: &RunConfig) -> Result<()> {
        match self {
            Self::Msbwoa(params) => msbwoa::validate(config, params),
            Self::Bwoa(rates) => bwoa::validate(config, rates),
            Self::Pso(params) => pso::validate(config, params),
            Self::Ga(params) => ga::validate(config, params),
        }
    }

    /// Executes one run under the shared run-result contract.
    pub fn run(
        &self,
        objective: &dyn Objective,
        space: &SearchSpace,
        config: &RunConfig,
    ) -> Result<RunResult> {
        match self {
            Self::Msbwoa(params) => msbwoa::run(objective, space, config, params),
            Self::Bwoa(rates) => bwoa::run(objective, space, config, rates),
            Self::Pso(params) => pso::run(objective, space, config, params),
            Self::Ga(params) => ga::run(objective, space, config, params),
        }
    }
}

/// Seed for run `run_index` of a batch: stable, so run `i` of a batch equals
/// a standalone run with `base + i`.
pub fn seed_for_run(base: u64, run_index: usize) -> u64 {
    base.wrapping_add(run_index as u64)
}

fn config_for_run(base: &RunConfig, run_index: usize) -> RunConfig {
    RunConfig {
        seed: seed_for_run(base.seed, run_index),
        ..base.clone()
    }
}

/// Runs `runs` independent seeded runs, in parallel when the `parallel`
/// feature is enabled.
#[cfg(feature = "parallel")]
pub fn run_batch(
    algorithm: &Algorithm,
    objective: &dyn Objective,
    space: &SearchSpace,
    base: &RunConfig,
    runs: usize,
) -> Vec<Result<RunResult>> {
    (0..runs)
        .into_par_iter()
        .map(|i| algorithm.run(objective, space, &config_for_run(base, i)))
        .collect()
}

/// Sequential fallback used when the `parallel` feature is disabled.
#[cfg(not(feature = "parallel"))]
pub fn run_batch(
    algorithm: &Algorithm,
    objective: &dyn Objective,
    space: &SearchSpace,
    base: &RunConfig,
    runs: usize,
) -> Vec<Result<RunResult>> {
    run_batch_sequential(algorithm, objective, space, base, runs)
}

/// Always-sequential batch, kept available for comparison benchmarks.
pub fn run_batch_sequential(
    algorithm: &Algorithm,
    objective: &dyn Objective,
    space: &SearchSpace,
    base: &RunConfig,
    runs: usize,
) -> Vec<Result<RunResult>> {
    (0..runs)
        .map(|i| algorithm.run(objective, space, &config_for_run(base, i)))
        .collect()
}
