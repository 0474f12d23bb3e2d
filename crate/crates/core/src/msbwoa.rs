//! Multi-strategy black widow optimization: tent-map initialization,
//! worst-position mutation, nonlinear-inertia position updates, and adaptive
//! random perturbation, applied in that order every iteration.
//!
//! Every stage uses greedy acceptance (a candidate replaces a member only
//! when strictly better), which is what guarantees the monotone convergence
//! curve.

use crate::chaos::{init_population_tent, TentMapParams};
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::objective::{checked_fitness, Objective};
use crate::population::{BestTracker, Population, RunResult};
use crate::rng::{RandomSource, SeededRng};
use crate::space::SearchSpace;
use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_PI_2;

/// Inertia weight schedule for the position-update stage.
///
/// The default composed-cosine form starts at 1, decreases strictly, and
/// ends at `cos((pi/2) sin 1)` (about 0.2465). A plain constant-by-product
/// reading of the weight formula evaluates `cos(pi/2)` first and therefore
/// collapses to ~1e-17 everywhere, which would nullify every position
/// update; the schedule tests pin that down.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InertiaWeight {
    /// `w(t) = cos((pi/2) * sin(sqrt(t / t_max)))` - the default.
    #[default]
    CosSinSqrt,
    /// `w(t) = cos((pi/2) * sqrt(t / t_max))` - alternate nonlinear form.
    CosSqrt,
    /// Fixed weight, as in classic constant-inertia updates.
    Constant(f64),
}

impl InertiaWeight {
    pub fn weight(&self, t: usize, t_max: usize) -> f64 {
        debug_assert!(t <= t_max && t_max >= 1);
        let frac = t as f64 / t_max as f64;
        match self {
            Self::CosSinSqrt => (FRAC_PI_2 * frac.sqrt().sin()).cos(),
            Self::CosSqrt => (FRAC_PI_2 * frac.sqrt()).cos(),
            Self::Constant(w) => *w,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Constant(w) if !(*w > 0.0 && *w <= 1.0) => Err(Error::InvalidConfig(format!(
                "constant inertia weight {w} must lie in (0, 1]"
            ))),
            _ => Ok(()),
        }
    }
}

/// MSBWOA parameters: tent-map breakpoint and inertia schedule.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize, Default)]
#[serde(default)]
pub struct MsbwoaParams {
    pub tent: TentMapParams,
    pub inertia: InertiaWeight,
}

impl MsbwoaParams {
    pub fn validate(&self) -> Result<()> {
        self.tent.validate()?;
        self.inertia.validate()
    }
}

/// Checks MSBWOA preconditions: population of at least 2, at least one
/// iteration, valid tent and inertia parameters.
pub fn validate(config: &RunConfig, params: &MsbwoaParams) -> Result<()> {
    config.validate(2)?;
    params.validate()
}

/// Mutation scale `k = 1 - r * (1 - (t / t_max)^2)`, in `[0, 1]`.
pub fn k_schedule(t: usize, t_max: usize, r: f64) -> f64 {
    debug_assert!(t <= t_max && t_max >= 1);
    let frac = t as f64 / t_max as f64;
    1.0 - r * (1.0 - frac * frac)
}

/// Perturbation radius coefficient `u = 1 - sqrt(t / t_max)`, decreasing
/// from 1 at the start to exactly 0 at `t_max`.
pub fn u_schedule(t: usize, t_max: usize) -> f64 {
    debug_assert!(t <= t_max && t_max >= 1);
    1.0 - (t as f64 / t_max as f64).sqrt()
}

/// Perturbs the worst (last) member of a sorted population.
///
/// Draws `r` for the mutation scale, then one standard normal per dimension,
/// and proposes `x * (1 + k * n)` per coordinate. Note the multiplicative
/// form cannot move a coordinate that is exactly zero; the perturbation
/// stage compensates in practice. The candidate replaces the worst member
/// only if strictly better.
pub fn mutate_worst(
    pop: &mut Population,
    t: usize,
    t_max: usize,
    space: &SearchSpace,
    objective: &dyn Objective,
    rng: &mut dyn RandomSource,
) {
    debug_assert!(pop.is_sorted());
    let k = k_schedule(t, t_max, rng.uniform());
    let worst_index = pop.len() - 1;
    let worst = &pop.members[worst_index];
    let mut candidate: Vec<f64> = worst
        .position
        .iter()
        .map(|&v| v * (1.0 + k * rng.normal()))
        .collect();
    space.clamp(&mut candidate);
    let fitness = checked_fitness(objective, &candidate, rng);
    if fitness < worst.fitness {
        pop.members[worst_index] = crate::population::Individual {
            position: candidate,
            fitness,
        };
    }
}

/// Pulls each member toward the global best: `x' = w*x + r1 .* (gbest - x)`
/// with `r1` uniform per dimension, greedy-accepted per member.
pub fn inertia_update(
    pop: &mut Population,
    gbest_position: &[f64],
    w: f64,
    space: &SearchSpace,
    objective: &dyn Objective,
    rng: &mut dyn RandomSource,
) {
    let dim = space.dim();
    for member in &mut pop.members {
        let mut candidate = Vec::with_capacity(dim);
        for (&x, &g) in member.position.iter().zip(gbest_position) {
            let r1 = rng.uniform();
            candidate.push(w * x + r1 * (g - x));
        }
        space.clamp(&mut candidate);
        let fitness = checked_fitness(objective, &candidate, rng);
        if fitness < member.fitness {
            member.position = candidate;
            member.fitness = fitness;
        }
    }
}

/// Bidirectional random kick scaled by `u_coef` and the box width.
///
/// Per member: a direction coin `r` (positive branch when `r >= 0.5`), then
/// one fresh uniform per dimension; the candidate moves by
/// `+/- u * (ub - lb) .* r_vec` and is greedy-accepted.
pub fn random_perturbation(
    pop: &mut Population,
    u_coef: f64,
    space: &SearchSpace,
    objective: &dyn Objective,
    rng: &mut dyn RandomSource,
) {
    let dim = space.dim();
    for member in &mut pop.members {
        let sign = if rng.uniform() >= 0.5 { 1.0 } else { -1.0 };
        let mut candidate = Vec::with_capacity(dim);
        for d in 0..dim {
            let step = u_coef * space.width(d) * rng.uniform();
            candidate.push(member.position[d] + sign * step);
        }
        space.clamp(&mut candidate);
        let fitness = checked_fitness(objective, &candidate, rng);
        if fitness < member.fitness {
            member.position = candidate;
            member.fitness = fitness;
        }
    }
}

/// Runs MSBWOA with a stream seeded from `config.seed`.
pub fn run(
    objective: &dyn Objective,
    space: &SearchSpace,
    config: &RunConfig,
    params: &MsbwoaParams,
) -> Result<RunResult> {
    let mut rng = SeededRng::new(config.seed);
    run_with_rng(objective, space, config, params, &mut rng)
}

/// Runs MSBWOA against a caller-supplied stream.
///
/// Tent-map initialization, then per iteration `t`: worst-position mutation,
/// inertia-weighted attraction toward the global best recorded at the end of
/// the previous iteration, random perturbation, and finally sort + record.
pub fn run_with_rng(
    objective: &dyn Objective,
    space: &SearchSpace,
    config: &RunConfig,
    params: &MsbwoaParams,
    rng: &mut dyn RandomSource,
) -> Result<RunResult> {
    validate(config, params)?;

    let mut population = init_population_tent(space, config.pop, rng, &params.tent);
    population.evaluate_and_sort(objective, rng);

    let mut tracker = BestTracker::new(config.max_iter);
    tracker.observe(&population);

    for t in 0..config.max_iter {
        mutate_worst(&mut population, t, config.max_iter, space, objective, rng);

        let w = params.inertia.weight(t, config.max_iter);
        let gbest = tracker.gbest_position().to_vec();
        inertia_update(&mut population, &gbest, w, space, objective, rng);

        let u = u_schedule(t, config.max_iter);
        random_perturbation(&mut population, u, space, objective, rng);

        population.sort_by_fitness();
        assert_eq!(population.len(), config.pop);
        tracker.record(&population, t);
    }

    Ok(tracker.into_result())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objectives::BenchmarkId;
    use crate::rng::TapeRng;

    // cos((pi/2) * sin 1), frozen from direct evaluation.
    const W_AT_END: f64 = 0.24645120005045767;

    #[test]
    fn k_schedule_examples() {
        assert_eq!(k_schedule(100, 100, 0.3), 1.0);
        assert_eq!(k_schedule(100, 100, 1.0), 1.0);
        assert_eq!(k_schedule(0, 100, 0.5), 0.5);
        assert_eq!(k_schedule(37, 100, 0.0), 1.0);
    }

    #[test]
    fn u_schedule_examples() {
        assert_eq!(u_schedule(0, 100), 1.0);
        assert_eq!(u_schedule(100, 100), 0.0);
        assert_eq!(u_schedule(25, 100), 0.5);
    }

    #[test]
    fn weight_endpoints() {
        let w = InertiaWeight::CosSinSqrt;
        assert_eq!(w.weight(0, 500), 1.0);
        assert!((w.weight(500, 500) - W_AT_END).abs() < 1e-12);
    }

    #[test]
    fn weight_strictly_decreasing() {
        let w = InertiaWeight::CosSinSqrt;
        for t in 0..500 {
            assert!(
                w.weight(t + 1, 500) < w.weight(t, 500),
                "w not strictly decreasing at t = {t}"
            );
        }
    }

    #[test]
    fn constant_by_product_form_collapses() {
        // Evaluating cos(pi/2) first makes the whole expression vanish for
        // every argument; this is why the composed form above is used.
        let lead = FRAC_PI_2.cos();
        for i in 0..=1000 {
            let x = i as f64 / 1000.0;
            assert!(lead * x.sin() < 1e-15);
        }
    }

    fn sorted_pop(positions: Vec<Vec<f64>>, fitness: &[f64]) -> Population {
        let mut pop = Population::from_positions(positions);
        for (m, &f) in pop.members.iter_mut().zip(fitness) {
            m.fitness = f;
        }
        pop.sort_by_fitness();
        pop
    }

    #[test]
    fn mutate_worst_zero_noise_keeps_position() {
        let space = SearchSpace::uniform(2, -10.0, 10.0).unwrap();
        let mut pop = sorted_pop(vec![vec![1.0, 1.0], vec![3.0, 3.0]], &[1.0, 9.0]);
        let f = |x: &[f64]| x.iter().map(|v| v * v).sum::<f64>();
        // r for k, then zero normals: candidate equals the worst, which is
        // not strictly better, so nothing changes.
        let mut rng = TapeRng::new(&[0.5], &[0.0, 0.0]);
        mutate_worst(&mut pop, 0, 10, &space, &f, &mut rng);
        assert_eq!(pop.members[1].position, vec![3.0, 3.0]);
        assert_eq!(pop.members[1].fitness, 9.0);
    }

    #[test]
    fn mutate_worst_fixes_the_origin() {
        let space = SearchSpace::uniform(2, -10.0, 10.0).unwrap();
        let mut pop = sorted_pop(vec![vec![-1.0, 0.0], vec![0.0, 0.0]], &[-1.0, 5.0]);
        let f = |_: &[f64]| 5.0;
        let mut rng = TapeRng::new(&[0.9], &[2.5, -1.5]);
        mutate_worst(&mut pop, 3, 10, &space, &f, &mut rng);
        // x = 0 stays 0 under the multiplicative form; candidate ties, so
        // the member is kept as-is.
        assert_eq!(pop.members[1].position, vec![0.0, 0.0]);
    }

    #[test]
    fn mutate_worst_hand_computed_single_dimension() {
        let space = SearchSpace::uniform(1, -10.0, 10.0).unwrap();
        // t = 0 with r = 0.5 gives k = 0.5; n = 1.0 proposes 2 * (1 + 0.5) = 3.
        // A decreasing objective accepts it, pinning the formula directly.
        let decreasing = |x: &[f64]| -x[0];
        let mut pop = sorted_pop(vec![vec![3.5], vec![2.0]], &[-3.5, -2.0]);
        let mut rng = TapeRng::new(&[0.5], &[1.0]);
        mutate_worst(&mut pop, 0, 10, &space, &decreasing, &mut rng);
        assert_eq!(pop.members[1].position, vec![3.0]);
        assert_eq!(pop.members[1].fitness, -3.0);

        // Same draw against an increasing-cost objective: 3 is worse than 2,
        // so greedy acceptance keeps the original worst.
        let quadratic = |x: &[f64]| x[0] * x[0];
        let mut pop = sorted_pop(vec![vec![0.5], vec![2.0]], &[0.25, 4.0]);
        let mut rng = TapeRng::new(&[0.5], &[1.0]);
        mutate_worst(&mut pop, 0, 10, &space, &quadratic, &mut rng);
        assert_eq!(pop.members[1].position, vec![2.0]);
        assert_eq!(pop.members[1].fitness, 4.0);
    }

    #[test]
    fn mutate_worst_touches_only_the_worst() {
        let space = SearchSpace::uniform(3, -5.0, 5.0).unwrap();
        let f = |x: &[f64]| x.iter().map(|v| v * v).sum::<f64>();
        let mut pop = Population::from_positions(vec![
            vec![0.1, 0.1, 0.1],
            vec![1.0, 1.0, 1.0],
            vec![2.0, 2.0, 2.0],
        ]);
        let mut rng = SeededRng::new(8);
        pop.evaluate_and_sort(&f, &mut rng);
        let before: Vec<Vec<f64>> = pop.members[..2]
            .iter()
            .map(|m| m.position.clone())
            .collect();
        mutate_worst(&mut pop, 1, 10, &space, &f, &mut rng);
        for (m, b) in pop.members[..2].iter().zip(&before) {
            assert_eq!(&m.position, b);
        }
    }

    #[test]
    fn inertia_update_fixed_point_at_gbest() {
        let space = SearchSpace::uniform(2, -10.0, 10.0).unwrap();
        let f = |x: &[f64]| x.iter().map(|v| v * v).sum::<f64>();
        let gbest = vec![1.5, -0.5];
        let mut pop = sorted_pop(vec![gbest.clone()], &[2.5]);
        let mut rng = TapeRng::new(&[0.3, 0.8], &[]);
        inertia_update(&mut pop, &gbest, 1.0, &space, &f, &mut rng);
        // w = 1 and x = gbest: candidate equals x exactly; tie, kept.
        assert_eq!(pop.members[0].position, gbest);
    }

    #[test]
    fn inertia_update_full_attraction() {
        let space = SearchSpace::uniform(1, -10.0, 10.0).unwrap();
        let f = |x: &[f64]| (x[0] - 3.0).abs();
        let gbest = vec![3.0];
        let mut pop = sorted_pop(vec![vec![-2.0]], &[5.0]);
        let mut rng = TapeRng::new(&[1.0 - f64::EPSILON], &[]);
        inertia_update(&mut pop, &gbest, 1.0, &space, &f, &mut rng);
        // w = 1, r1 ~= 1: candidate lands (numerically) on gbest.
        assert!((pop.members[0].position[0] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn inertia_update_hand_computed() {
        let space = SearchSpace::uniform(1, -10.0, 10.0).unwrap();
        let f = |x: &[f64]| x[0] * x[0];
        let gbest = vec![0.0];
        let mut pop = sorted_pop(vec![vec![4.0]], &[16.0]);
        let mut rng = TapeRng::new(&[0.25], &[]);
        inertia_update(&mut pop, &gbest, 0.5, &space, &f, &mut rng);
        // 0.5 * 4 + 0.25 * (0 - 4) = 1
        assert_eq!(pop.members[0].position, vec![1.0]);
        assert_eq!(pop.members[0].fitness, 1.0);
    }

    #[test]
    fn perturbation_zero_radius_is_identity() {
        let space = SearchSpace::uniform(2, -5.0, 5.0).unwrap();
        let f = |x: &[f64]| x.iter().map(|v| v * v).sum::<f64>();
        let mut pop = sorted_pop(vec![vec![1.0, -1.0], vec![2.0, 2.0]], &[2.0, 8.0]);
        let mut rng = TapeRng::new(&[0.9, 0.1, 0.6, 0.2, 0.8, 0.3], &[]);
        random_perturbation(&mut pop, 0.0, &space, &f, &mut rng);
        assert_eq!(pop.members[0].position, vec![1.0, -1.0]);
        assert_eq!(pop.members[1].position, vec![2.0, 2.0]);
    }

    #[test]
    fn perturbation_branches_hand_computed() {
        let space = SearchSpace::uniform(1, -5.0, 5.0).unwrap();
        // Fitness rewards larger x so the positive kick is accepted.
        let f = |x: &[f64]| -x[0];
        let mut pop = sorted_pop(vec![vec![0.0]], &[0.0]);
        // coin 0.7 (positive branch), magnitude 0.1: 0 + 1 * 10 * 0.1 = 1.
        let mut rng = TapeRng::new(&[0.7, 0.1], &[]);
        random_perturbation(&mut pop, 1.0, &space, &f, &mut rng);
        assert_eq!(pop.members[0].position, vec![1.0]);

        // Mirrored: fitness rewards smaller x, coin 0.3 takes the negative
        // branch: 1 - 10 * 0.1 = 0.
        let f2 = |x: &[f64]| x[0];
        pop.members[0].fitness = pop.members[0].position[0];
        let mut rng = TapeRng::new(&[0.3, 0.1], &[]);
        random_perturbation(&mut pop, 1.0, &space, &f2, &mut rng);
        assert_eq!(pop.members[0].position, vec![0.0]);
    }

    #[test]
    fn perturbation_displacement_bounded_near_the_end() {
        let space = SearchSpace::uniform(3, -5.0, 5.0).unwrap();
        let f = |_: &[f64]| 0.0; // ties everywhere: every candidate rejected
        let t_max = 500;
        let u = u_schedule(t_max - 1, t_max);
        let mut pop = sorted_pop(vec![vec![0.5, -0.5, 0.0]; 4], &[0.0; 4]);
        let before: Vec<Vec<f64>> = pop.members.iter().map(|m| m.position.clone()).collect();
        let mut rng = SeededRng::new(12);
        random_perturbation(&mut pop, u, &space, &f, &mut rng);
        for (m, b) in pop.members.iter().zip(&before) {
            for (d, (&got, &was)) in m.position.iter().zip(b).enumerate() {
                assert!((got - was).abs() <= u * space.width(d) + 1e-15);
            }
        }
    }

    #[test]
    fn greedy_acceptance_never_worsens_members() {
        let space = BenchmarkId::F9.space(Some(5)).unwrap();
        let f = BenchmarkId::F9;
        let mut rng = SeededRng::new(3);
        let mut pop = init_population_tent(&space, 12, &mut rng, &TentMapParams::default());
        pop.evaluate_and_sort(&f, &mut rng);
        for t in 0..20 {
            let before: Vec<f64> = pop.members.iter().map(|m| m.fitness).collect();
            let gbest = pop.members[0].position.clone();
            mutate_worst(&mut pop, t, 20, &space, &f, &mut rng);
            inertia_update(&mut pop, &gbest, 0.7, &space, &f, &mut rng);
            random_perturbation(&mut pop, u_schedule(t, 20), &space, &f, &mut rng);
            for (m, &b) in pop.members.iter().zip(&before) {
                assert!(m.fitness <= b);
            }
            pop.sort_by_fitness();
        }
    }

    #[test]
    fn constant_objective_flat_curve() {
        let space = SearchSpace::uniform(4, -2.0, 2.0).unwrap();
        let config = RunConfig::new(6, 25, 11);
        let c = |_: &[f64]| -1.5;
        let result = run(&c, &space, &config, &MsbwoaParams::default()).unwrap();
        assert!(result.curve.iter().all(|&v| v == -1.5));
    }

    #[test]
    fn fixed_seed_reproduces_identical_result() {
        let space = BenchmarkId::F1.space(Some(2)).unwrap();
        let config = RunConfig::new(10, 100, 1234);
        let params = MsbwoaParams::default();
        let a = run(&BenchmarkId::F1, &space, &config, &params).unwrap();
        let b = run(&BenchmarkId::F1, &space, &config, &params).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_invalid_configs_before_evaluating() {
        let space = SearchSpace::uniform(2, -1.0, 1.0).unwrap();
        let params = MsbwoaParams::default();
        assert!(run(&BenchmarkId::F1, &space, &RunConfig::new(1, 10, 0), &params).is_err());
        assert!(run(&BenchmarkId::F1, &space, &RunConfig::new(10, 0, 0), &params).is_err());
        let bad = MsbwoaParams {
            tent: TentMapParams { u: 1.5, x0: 0.5 },
            ..Default::default()
        };
        assert!(run(&BenchmarkId::F1, &space, &RunConfig::new(10, 10, 0), &bad).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn schedules_stay_in_unit_interval(t in 0usize..=500, r in 0.0f64..=1.0) {
                let k = k_schedule(t, 500, r);
                let u = u_schedule(t, 500);
                prop_assert!((0.0..=1.0).contains(&k));
                prop_assert!((0.0..=1.0).contains(&u));
            }

            #[test]
            fn weights_stay_in_unit_interval(t in 0usize..=500) {
                for schedule in [InertiaWeight::CosSinSqrt, InertiaWeight::CosSqrt] {
                    let w = schedule.weight(t, 500);
                    prop_assert!(w > 0.0 && w <= 1.0);
                }
            }
        }
    }
}
