//! Common per-run configuration shared by every optimizer.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Population size, iteration budget, and RNG seed for one run.
///
/// Algorithm-specific rates and schedules live in each optimizer's own
/// parameter struct.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub pop: usize,
    pub max_iter: usize,
    pub seed: u64,
}

impl RunConfig {
    pub fn new(pop: usize, max_iter: usize, seed: u64) -> Self {
        Self {
            pop,
            max_iter,
            seed,
        }
    }

    /// Checks the shared preconditions; `min_pop` is optimizer-specific.
    pub fn validate(&self, min_pop: usize) -> Result<()> {
        if self.pop < min_pop {
            return Err(Error::InvalidConfig(format!(
                "population size {} is below the minimum {min_pop}",
                self.pop
            )));
        }
        if self.max_iter < 1 {
            return Err(Error::InvalidConfig("max_iter must be at least 1".into()));
        }
        Ok(())
    }
}
