//! Objective function contract. Lower is better; callers negate to maximize.

use crate::rng::RandomSource;

/// A minimization objective.
///
/// `rng` is the calling run's own stream; deterministic objectives ignore it,
/// noisy ones (the quartic-with-noise benchmark) consume draws from it so the
/// whole run stays replayable from one seed.
pub trait Objective: Sync {
    fn evaluate(&self, x: &[f64], rng: &mut dyn RandomSource) -> f64;
}

impl<F> Objective for F
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    fn evaluate(&self, x: &[f64], _rng: &mut dyn RandomSource) -> f64 {
        self(x)
    }
}

/// Evaluates `objective` at `x`, mapping non-finite values to `+inf`.
///
/// Keeps long benchmark sweeps alive when a function overflows at an extreme
/// point; the member simply sorts last. The substitution is logged once per
/// occurrence.
pub fn checked_fitness(objective: &dyn Objective, x: &[f64], rng: &mut dyn RandomSource) -> f64 {
    let value = objective.evaluate(x, rng);
    if value.is_finite() {
        value
    } else {
        log::warn!("objective returned non-finite value {value}; substituting +inf");
        f64::INFINITY
    }
}
