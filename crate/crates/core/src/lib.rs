//! Deterministic, seedable global optimization around the multi-strategy
//! black widow optimizer.
//!
//! The crate provides:
//!
//! - [`msbwoa`]: tent-map initialization, worst-position mutation, nonlinear
//!   inertia position updates, and adaptive random perturbation;
//! - [`bwoa`]: the ancestor algorithm (procreation, cannibalism, mutation);
//! - [`baselines`]: canonical PSO and real-coded GA under the same contract;
//! - [`objectives`]: the classical F1-F23 benchmark suite with known optima;
//! - [`chaos`]: tent/sine map sequence generators and chaotic initialization;
//! - [`batch`]: multi-seed batches, rayon-parallel behind the `parallel`
//!   feature (default) with an always-available sequential path.
//!
//! Every run is reproducible: one `u64` seed fully determines the result,
//! and all optimizers record a monotone per-iteration convergence curve.
//!
//! ```
//! use msbwoa_core::{msbwoa, objectives::BenchmarkId, MsbwoaParams, RunConfig};
//!
//! let space = BenchmarkId::F16.space(None).unwrap();
//! let config = RunConfig::new(30, 200, 7);
//! let result = msbwoa::run(&BenchmarkId::F16, &space, &config, &MsbwoaParams::default()).unwrap();
//! assert!(result.gbest_score < -1.0);
//! ```

pub mod baselines;
pub mod batch;
pub mod bwoa;
pub mod chaos;
pub mod config;
pub mod error;
pub mod msbwoa;
pub mod objective;
pub mod objectives;
pub mod population;
pub mod rng;
pub mod space;

pub use baselines::{GaParams, PsoParams};
pub use batch::{run_batch, run_batch_sequential, seed_for_run, Algorithm};
pub use bwoa::BwoaRates;
pub use chaos::{MapKind, TentMapParams};
pub use config::RunConfig;
pub use error::{Error, Result};
pub use msbwoa::{InertiaWeight, MsbwoaParams};
pub use objective::{checked_fitness, Objective};
pub use population::{BestTracker, Individual, Population, RunResult};
pub use rng::{RandomSource, SeededRng, TapeRng};
pub use space::{clamp_to_bounds, SearchSpace};
