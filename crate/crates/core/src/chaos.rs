//! Chaotic map sequence generators and chaotic population initialization.
//!
//! The tent map's iterates fill `[0, 1]` near-uniformly, which makes it a
//! good source of spread-out starting positions. The sine map is included for
//! distribution diagnostics only; its iterates are visibly non-uniform.

use crate::error::{Error, Result};
use crate::population::Population;
use crate::rng::RandomSource;
use crate::space::SearchSpace;
use serde::{Deserialize, Serialize};

/// Tent map parameters: breakpoint `u` and sequence seed `x0`, both in (0, 1).
///
/// `u` just below one half maximizes the chaotic dynamics; 0.499 is the
/// conventional choice.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TentMapParams {
    pub u: f64,
    pub x0: f64,
}

impl Default for TentMapParams {
    fn default() -> Self {
        Self { u: 0.499, x0: 0.7 }
    }
}

impl TentMapParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.u > 0.0 && self.u < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "tent map breakpoint u = {} must lie in (0, 1)",
                self.u
            )));
        }
        if !(self.x0 > 0.0 && self.x0 < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "tent map seed x0 = {} must lie in (0, 1)",
                self.x0
            )));
        }
        Ok(())
    }
}

/// Which chaotic map drives a sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MapKind {
    Tent,
    Sine,
}

/// One tent map step: `x/u` below the breakpoint, `(1-x)/(1-u)` at or above.
///
/// Panics if `x` lies outside `[0, 1]`.
pub fn tent_next(x: f64, u: f64) -> f64 {
    assert!(
        (0.0..=1.0).contains(&x),
        "tent map input {x} outside [0, 1]"
    );
    debug_assert!(u > 0.0 && u < 1.0);
    if x < u {
        x / u
    } else {
        (1.0 - x) / (1.0 - u)
    }
}

/// One sine map step: `sin(pi * x)`.
pub fn sine_next(x: f64) -> f64 {
    debug_assert!(x > 0.0 && x < 1.0, "sine map input {x} outside (0, 1)");
    (std::f64::consts::PI * x).sin()
}

/// Advances one step, escaping absorbing states first.
///
/// An iterate of exactly 0 or 1 would freeze the tent map (0 is a fixed
/// point, 1 maps onto it), so such a state is replaced by a fresh uniform
/// draw in (0, 1) before stepping.
fn advance(state: f64, kind: MapKind, u: f64, rng: &mut dyn RandomSource) -> f64 {
    let x = if state > 0.0 && state < 1.0 {
        state
    } else {
        rng.open01()
    };
    match kind {
        MapKind::Tent => tent_next(x, u),
        MapKind::Sine => sine_next(x),
    }
}

/// Generates `n` chaotic iterates starting from `params.x0`.
///
/// `v[0]` is the first iterate of `x0`; each later value iterates its
/// predecessor. `rng` is consulted only to escape absorbing states, so a
/// non-degenerate seed yields a fully deterministic sequence.
pub fn chaotic_sequence(
    params: &TentMapParams,
    n: usize,
    kind: MapKind,
    rng: &mut dyn RandomSource,
) -> Vec<f64> {
    assert!(n >= 1, "sequence length must be at least 1");
    let mut out = Vec::with_capacity(n);
    let mut state = params.x0;
    for _ in 0..n {
        state = advance(state, kind, params.u, rng);
        out.push(state);
    }
    out
}

/// Builds `pop` individuals whose coordinates come from per-individual tent
/// map streams scaled into the box.
///
/// Each individual draws its own chaotic seed from `rng` (the "random
/// positioning" part) and iterates it across dimensions, so individuals stay
/// uncorrelated. A tent iterate `c` maps to `lb[d] + c * (ub[d] - lb[d])`.
/// Fitness is left unset until evaluation.
pub fn init_population_tent(
    space: &SearchSpace,
    pop: usize,
    rng: &mut dyn RandomSource,
    params: &TentMapParams,
) -> Population {
    assert!(pop >= 2, "population size must be at least 2");
    let dim = space.dim();
    let mut positions = Vec::with_capacity(pop);
    for _ in 0..pop {
        let mut state = rng.open01();
        let mut position = Vec::with_capacity(dim);
        for d in 0..dim {
            state = advance(state, MapKind::Tent, params.u, rng);
            position.push(space.lb()[d] + state * space.width(d));
        }
        positions.push(position);
    }
    Population::from_positions(positions)
}
