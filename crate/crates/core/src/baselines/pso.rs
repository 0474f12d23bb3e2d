//! Global-best particle swarm optimization with velocity clamping.

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::objective::{checked_fitness, Objective};
use crate::population::{BestTracker, RunResult};
use crate::rng::{RandomSource, SeededRng};
use crate::space::SearchSpace;
use serde::{Deserialize, Serialize};

/// Constriction-style PSO parameters.
///
/// `vmax_fraction` caps per-dimension speed at that fraction of the box
/// width.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct PsoParams {
    pub inertia: f64,
    pub cognitive: f64,
    pub social: f64,
    pub vmax_fraction: f64,
}

impl Default for PsoParams {
    fn default() -> Self {
        Self {
            inertia: 0.729,
            cognitive: 1.49445,
            social: 1.49445,
            vmax_fraction: 0.2,
        }
    }
}

impl PsoParams {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("inertia", self.inertia),
            ("cognitive", self.cognitive),
            ("social", self.social),
        ] {
            if v <= 0.0 || !v.is_finite() {
                return Err(Error::InvalidConfig(format!(
                    "pso {name} {v} must be positive"
                )));
            }
        }
        if !(self.vmax_fraction > 0.0 && self.vmax_fraction <= 1.0) {
            return Err(Error::InvalidConfig(format!(
                "pso vmax_fraction {} must lie in (0, 1]",
                self.vmax_fraction
            )));
        }
        Ok(())
    }
}

/// Checks PSO preconditions: population of at least 2, at least one
/// iteration, positive coefficients, velocity cap in range.
pub fn validate(config: &RunConfig, params: &PsoParams) -> Result<()> {
    config.validate(2)?;
    params.validate()
}

pub fn run(
    objective: &dyn Objective,
    space: &SearchSpace,
    config: &RunConfig,
    params: &PsoParams,
) -> Result<RunResult> {
    let mut rng = SeededRng::new(config.seed);
    run_with_rng(objective, space, config, params, &mut rng)
}

/// Canonical update per particle: `v = w*v + c1*r1.*(pbest - x) +
/// c2*r2.*(gbest - x)`, velocity clamped per dimension, position clamped to
/// the box. Personal and global bests update as soon as a particle is
/// evaluated.
pub fn run_with_rng(
    objective: &dyn Objective,
    space: &SearchSpace,
    config: &RunConfig,
    params: &PsoParams,
    rng: &mut dyn RandomSource,
) -> Result<RunResult> {
    validate(config, params)?;

    let dim = space.dim();
    let vmax: Vec<f64> = (0..dim)
        .map(|d| params.vmax_fraction * space.width(d))
        .collect();

    let mut positions: Vec<Vec<f64>> = (0..config.pop)
        .map(|_| {
            (0..dim)
                .map(|d| rng.range(space.lb()[d], space.ub()[d]))
                .collect()
        })
        .collect();
    let mut velocities = vec![vec![0.0; dim]; config.pop];

    let mut tracker = BestTracker::new(config.max_iter);
    let mut pbest_pos = positions.clone();
    let mut pbest_fit = Vec::with_capacity(config.pop);
    for position in &positions {
        let fitness = checked_fitness(objective, position, rng);
        pbest_fit.push(fitness);
        tracker.offer(position, fitness);
    }

    for t in 0..config.max_iter {
        for i in 0..config.pop {
            let gbest = tracker.gbest_position().to_vec();
            for d in 0..dim {
                let r1 = rng.uniform();
                let r2 = rng.uniform();
                velocities[i][d] = step_velocity(
                    params,
                    velocities[i][d],
                    positions[i][d],
                    pbest_pos[i][d],
                    gbest[d],
                    vmax[d],
                    r1,
                    r2,
                );
                positions[i][d] += velocities[i][d];
            }
            space.clamp(&mut positions[i]);
            let fitness = checked_fitness(objective, &positions[i], rng);
            if fitness < pbest_fit[i] {
                pbest_fit[i] = fitness;
                pbest_pos[i] = positions[i].clone();
                tracker.offer(&positions[i], fitness);
            }
        }
        assert_eq!(positions.len(), config.pop);
        tracker.record_value(t);
    }

    Ok(tracker.into_result())
}

/// One velocity component update, clamped to `[-vmax, vmax]`.
#[allow(clippy::too_many_arguments)]
fn step_velocity(
    params: &PsoParams,
    v: f64,
    x: f64,
    pbest: f64,
    gbest: f64,
    vmax: f64,
    r1: f64,
    r2: f64,
) -> f64 {
    let v =
        params.inertia * v + params.cognitive * r1 * (pbest - x) + params.social * r2 * (gbest - x);
    v.clamp(-vmax, vmax)
}
