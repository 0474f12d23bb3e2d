//! Comparison baselines: canonical global-best PSO and a real-coded GA,
//! under the same run-result contract as the black widow optimizers.

pub mod ga;
pub mod pso;

pub use ga::GaParams;
pub use pso::PsoParams;
