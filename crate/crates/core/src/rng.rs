//! Seedable randomness used by every optimizer run.
//!
//! Each run owns exactly one stream; streams are never shared. The same seed
//! replays the same draw sequence bit for bit, which is what makes whole runs
//! reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use std::collections::VecDeque;

/// Source of the random draws an optimizer consumes.
///
/// The trait exists so tests can substitute a scripted tape for the seeded
/// stream while exercising the exact same code paths.
pub trait RandomSource {
    /// Uniform draw in `[0, 1)`.
    fn uniform(&mut self) -> f64;

    /// Standard normal draw (mean 0, variance 1).
    fn normal(&mut self) -> f64;

    /// Uniform integer in `0..n`. `n` must be at least 1.
    fn index(&mut self, n: usize) -> usize;

    /// Uniform draw in `[lo, hi)`.
    fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Uniform draw in the open interval `(0, 1)`.
    fn open01(&mut self) -> f64 {
        loop {
            let v = self.uniform();
            if v > 0.0 {
                return v;
            }
        }
    }
}

/// Deterministic stream backed by ChaCha8, fully determined by its seed.
pub struct SeededRng {
    seed: u64,
    inner: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

impl RandomSource for SeededRng {
    fn uniform(&mut self) -> f64 {
        self.inner.random::<f64>()
    }

    fn normal(&mut self) -> f64 {
        self.inner.sample(StandardNormal)
    }

    fn index(&mut self, n: usize) -> usize {
        debug_assert!(n >= 1);
        self.inner.random_range(0..n)
    }
}

/// Scripted source replaying pre-recorded draws.
///
/// Used by trace tests that pin an optimizer trajectory to hand-computed
/// values. `index` is derived from the next uniform as `floor(u * n)` so a
/// tape of uniforms fully determines every draw. Panics when a tape runs dry.
pub struct TapeRng {
    uniforms: VecDeque<f64>,
    normals: VecDeque<f64>,
}

impl TapeRng {
    pub fn new(uniforms: &[f64], normals: &[f64]) -> Self {
        Self {
            uniforms: uniforms.iter().copied().collect(),
            normals: normals.iter().copied().collect(),
        }
    }

    pub fn remaining(&self) -> (usize, usize) {
        (self.uniforms.len(), self.normals.len())
    }
}

impl RandomSource for TapeRng {
    fn uniform(&mut self) -> f64 {
        self.uniforms.pop_front().expect("uniform tape exhausted")
    }

    fn normal(&mut self) -> f64 {
        self.normals.pop_front().expect("normal tape exhausted")
    }

    fn index(&mut self, n: usize) -> usize {
        debug_assert!(n >= 1);
        ((self.uniform() * n as f64) as usize).min(n - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_sequence() {
        let mut a = SeededRng::new(7);
        let mut b = SeededRng::new(7);
        for _ in 0..100 {
            assert_eq!(a.uniform().to_bits(), b.uniform().to_bits());
            assert_eq!(a.normal().to_bits(), b.normal().to_bits());
            assert_eq!(a.index(13), b.index(13));
        }
    }

    #[test]
    fn different_seeds_differ() {
        let mut a = SeededRng::new(1);
        let mut b = SeededRng::new(2);
        let va: Vec<f64> = (0..8).map(|_| a.uniform()).collect();
        let vb: Vec<f64> = (0..8).map(|_| b.uniform()).collect();
        assert_ne!(va, vb);
    }

    #[test]
    fn uniform_in_unit_interval() {
        let mut rng = SeededRng::new(42);
        for _ in 0..10_000 {
            let v = rng.uniform();
            assert!((0.0..1.0).contains(&v));
        }
    }

    #[test]
    fn normal_moments_roughly_standard() {
        let mut rng = SeededRng::new(42);
        let n = 100_000;
        let draws: Vec<f64> = (0..n).map(|_| rng.normal()).collect();
        let mean = draws.iter().sum::<f64>() / n as f64;
        let var = draws.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n as f64;
        assert!(mean.abs() < 0.02, "mean {mean}");
        assert!((var - 1.0).abs() < 0.03, "var {var}");
    }

    #[test]
    fn tape_replays_and_maps_indices() {
        let mut tape = TapeRng::new(&[0.25, 0.99, 0.0], &[1.5]);
        assert_eq!(tape.uniform(), 0.25);
        assert_eq!(tape.index(10), 9); // floor(0.99 * 10)
        assert_eq!(tape.index(4), 0); // floor(0.0 * 4)
        assert_eq!(tape.normal(), 1.5);
    }

    #[test]
    #[should_panic(expected = "uniform tape exhausted")]
    fn tape_panics_when_dry() {
        let mut tape = TapeRng::new(&[], &[]);
        tape.uniform();
    }
}
