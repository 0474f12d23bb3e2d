//! Experiment configuration: JSON documents mirroring the field names below,
//! with CLI flags overriding file values.

use msbwoa_core::objectives::BenchmarkId;
use msbwoa_core::{
    Algorithm, BwoaRates, GaParams, InertiaWeight, MsbwoaParams, PsoParams, TentMapParams,
};
use serde::{Deserialize, Serialize};
use std::path::Path;

use crate::CliError;

/// Which optimizer an experiment exercises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
#[clap(rename_all = "lowercase")]
pub enum AlgorithmName {
    Msbwoa,
    Bwoa,
    Pso,
    Ga,
}

impl AlgorithmName {
    pub const ALL: [AlgorithmName; 4] = [
        AlgorithmName::Msbwoa,
        AlgorithmName::Bwoa,
        AlgorithmName::Pso,
        AlgorithmName::Ga,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Msbwoa => "msbwoa",
            Self::Bwoa => "bwoa",
            Self::Pso => "pso",
            Self::Ga => "ga",
        }
    }
}

/// Inertia schedule selection, exposed as `inertia.variant` plus the
/// constant-weight reference value.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct InertiaSection {
    pub variant: InertiaVariant,
    pub constant: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
#[clap(rename_all = "kebab-case")]
pub enum InertiaVariant {
    CosSinSqrt,
    CosSqrt,
    Constant,
}

impl Default for InertiaSection {
    fn default() -> Self {
        Self {
            variant: InertiaVariant::CosSinSqrt,
            constant: 0.9,
        }
    }
}

impl InertiaSection {
    pub fn to_weight(self) -> InertiaWeight {
        match self.variant {
            InertiaVariant::CosSinSqrt => InertiaWeight::CosSinSqrt,
            InertiaVariant::CosSqrt => InertiaWeight::CosSqrt,
            InertiaVariant::Constant => InertiaWeight::Constant(self.constant),
        }
    }
}

/// One experiment: algorithm, benchmark, budget, seeds, and per-algorithm
/// parameter sections. Unknown fields are rejected so typos surface as
/// usage errors.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub algorithm: AlgorithmName,
    pub benchmark: String,
    pub dim: Option<usize>,
    pub pop: usize,
    pub max_iter: usize,
    pub runs: usize,
    pub seed: u64,
    pub tent: TentMapParams,
    pub inertia: InertiaSection,
    pub bwoa: BwoaRates,
    pub pso: PsoParams,
    pub ga: GaParams,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            algorithm: AlgorithmName::Msbwoa,
            benchmark: "F1".to_string(),
            dim: None,
            pop: 30,
            max_iter: 500,
            runs: 30,
            seed: 0,
            tent: TentMapParams::default(),
            inertia: InertiaSection::default(),
            bwoa: BwoaRates::default(),
            pso: PsoParams::default(),
            ga: GaParams::default(),
        }
    }
}

impl ExperimentConfig {
    /// Reads a config document. A manifest written by a previous run is also
    /// accepted: its resolved config sits under the `config` key.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        let value: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("invalid JSON in {}: {e}", path.display())))?;
        let doc = value.get("config").cloned().unwrap_or(value);
        serde_json::from_value(doc)
            .map_err(|e| CliError::Usage(format!("invalid config {}: {e}", path.display())))
    }

    pub fn benchmark_id(&self) -> Result<BenchmarkId, CliError> {
        self.benchmark
            .parse::<BenchmarkId>()
            .map_err(|e| CliError::Usage(e.to_string()))
    }

    /// The configured algorithm with its parameter section applied.
    pub fn algorithm_instance(&self, name: AlgorithmName) -> Algorithm {
        match name {
            AlgorithmName::Msbwoa => Algorithm::Msbwoa(MsbwoaParams {
                tent: self.tent,
                inertia: self.inertia.to_weight(),
            }),
            AlgorithmName::Bwoa => Algorithm::Bwoa(self.bwoa),
            AlgorithmName::Pso => Algorithm::Pso(self.pso),
            AlgorithmName::Ga => Algorithm::Ga(self.ga),
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.runs < 1 {
            return Err(CliError::Usage("runs must be at least 1".into()));
        }
        let id = self.benchmark_id()?;
        id.resolve_dim(self.dim)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(())
    }
}
