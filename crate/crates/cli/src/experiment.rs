//! Multi-seed experiment execution and comparison tables.

use crate::config::{AlgorithmName, ExperimentConfig};
use crate::output::{self, SummaryRow};
use crate::stats::StatsSummary;
use crate::CliError;
use msbwoa_core::objectives::BenchmarkId;
use msbwoa_core::{run_batch, RunConfig, RunResult, SearchSpace};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// Outcome of one seeded run inside a batch.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunRecord {
    pub run: usize,
    pub seed: u64,
    pub status: RunStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub final_score: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve_file: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RunStatus {
    Ok,
    Failed,
}

/// Executed batch for one algorithm: per-run records plus kept curves.
pub struct BatchOutcome {
    pub records: Vec<RunRecord>,
    pub results: Vec<Option<RunResult>>,
    pub summary: Option<StatsSummary>,
}

impl BatchOutcome {
    pub fn succeeded(&self) -> usize {
        self.results.iter().filter(|r| r.is_some()).count()
    }

    /// Per-iteration mean of best fitness over successful runs.
    pub fn mean_curve(&self, max_iter: usize) -> Vec<f64> {
        let curves: Vec<&RunResult> = self.results.iter().flatten().collect();
        if curves.is_empty() {
            return vec![f64::NAN; max_iter];
        }
        (0..max_iter)
            .map(|t| curves.iter().map(|r| r.curve[t]).sum::<f64>() / curves.len() as f64)
            .collect()
    }
}

/// Runs `config.runs` independent seeded runs of one algorithm. Failed runs
/// are recorded, not fatal.
pub fn execute_batch(
    config: &ExperimentConfig,
    name: AlgorithmName,
    benchmark: BenchmarkId,
    space: &SearchSpace,
) -> BatchOutcome {
    let algorithm = config.algorithm_instance(name);
    let base = RunConfig::new(config.pop, config.max_iter, config.seed);
    let batch = run_batch(&algorithm, &benchmark, space, &base, config.runs);

    let mut records = Vec::with_capacity(config.runs);
    let mut results = Vec::with_capacity(config.runs);
    for (i, outcome) in batch.into_iter().enumerate() {
        let seed = msbwoa_core::seed_for_run(config.seed, i);
        match outcome {
            Ok(result) => {
                records.push(RunRecord {
                    run: i,
                    seed,
                    status: RunStatus::Ok,
                    error: None,
                    final_score: Some(result.gbest_score),
                    curve_file: Some(curve_file_name(name.as_str(), i)),
                });
                results.push(Some(result));
            }
            Err(e) => {
                log::warn!("run {i} of {} failed: {e}", name.as_str());
                records.push(RunRecord {
                    run: i,
                    seed,
                    status: RunStatus::Failed,
                    error: Some(e.to_string()),
                    final_score: None,
                    curve_file: None,
                });
                results.push(None);
            }
        }
    }

    let scores: Vec<f64> = records.iter().filter_map(|r| r.final_score).collect();
    BatchOutcome {
        records,
        results,
        summary: StatsSummary::from_scores(&scores),
    }
}

pub fn curve_file_name(algorithm: &str, run: usize) -> String {
    format!("curve_{algorithm}_{run}.csv")
}

/// Benchmark metadata embedded in manifests.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BenchmarkInfo {
    pub id: String,
    pub name: String,
    pub dim: usize,
    pub lb: f64,
    pub ub: f64,
    pub known_min: f64,
}

impl BenchmarkInfo {
    pub fn resolve(benchmark: BenchmarkId, dim: usize) -> Self {
        let (lb, ub) = benchmark.bounds();
        Self {
            id: benchmark.to_string(),
            name: benchmark.name().to_string(),
            dim,
            lb,
            ub,
            known_min: benchmark.known_min(dim),
        }
    }
}

#[derive(Serialize)]
struct RunManifest<'a> {
    config: &'a ExperimentConfig,
    benchmark: BenchmarkInfo,
    runs: &'a [RunRecord],
    summary: Option<StatsSummary>,
}

/// `run` subcommand: one algorithm, `runs` seeds, full artifact set
/// (`manifest.json`, per-run curve CSVs, `summary.csv`).
pub fn run_experiment(config: &ExperimentConfig, out_dir: &Path) -> Result<(), CliError> {
    config.validate()?;
    let benchmark = config.benchmark_id()?;
    let dim = benchmark.resolve_dim(config.dim).map_err(usage)?;
    let space = benchmark.space(config.dim).map_err(usage)?;

    // Freeze the resolved dimension so the manifest replays identically.
    let resolved = ExperimentConfig {
        dim: Some(dim),
        ..config.clone()
    };
    let base = RunConfig::new(resolved.pop, resolved.max_iter, resolved.seed);
    resolved
        .algorithm_instance(resolved.algorithm)
        .validate(&base)
        .map_err(usage)?;

    let outcome = execute_batch(&resolved, resolved.algorithm, benchmark, &space);
    write_batch_curves(out_dir, resolved.algorithm.as_str(), &outcome)?;

    output::write_summary_csv(
        &out_dir.join("summary.csv"),
        &[summary_row(&resolved, resolved.algorithm, dim, &outcome)],
    )?;
    output::write_json(
        &out_dir.join("manifest.json"),
        &RunManifest {
            config: &resolved,
            benchmark: BenchmarkInfo::resolve(benchmark, dim),
            runs: &outcome.records,
            summary: outcome.summary,
        },
    )?;

    print_rows(&[(resolved.algorithm, &outcome)]);
    Ok(())
}

#[derive(Serialize)]
struct CompareManifest<'a> {
    config: &'a ExperimentConfig,
    benchmark: BenchmarkInfo,
    algorithms: Vec<CompareEntry<'a>>,
}

#[derive(Serialize)]
struct CompareEntry<'a> {
    name: &'a str,
    runs: &'a [RunRecord],
    summary: Option<StatsSummary>,
}

/// `compare` subcommand: several algorithms under one shared benchmark and
/// budget, one summary row and one mean-curve CSV per algorithm.
pub fn compare(
    config: &ExperimentConfig,
    algorithms: &[AlgorithmName],
    out_dir: &Path,
) -> Result<(), CliError> {
    if algorithms.is_empty() {
        return Err(CliError::Usage("no algorithms selected".into()));
    }
    config.validate()?;
    let benchmark = config.benchmark_id()?;
    let dim = benchmark.resolve_dim(config.dim).map_err(usage)?;
    let space = benchmark.space(config.dim).map_err(usage)?;
    let resolved = ExperimentConfig {
        dim: Some(dim),
        ..config.clone()
    };
    let base = RunConfig::new(resolved.pop, resolved.max_iter, resolved.seed);
    for &name in algorithms {
        resolved
            .algorithm_instance(name)
            .validate(&base)
            .map_err(usage)?;
    }

    let outcomes: Vec<(AlgorithmName, BatchOutcome)> = algorithms
        .iter()
        .map(|&name| (name, execute_batch(&resolved, name, benchmark, &space)))
        .collect();

    let mut rows = Vec::new();
    for (name, outcome) in &outcomes {
        write_batch_curves(out_dir, name.as_str(), outcome)?;
        output::write_mean_curve_csv(
            &out_dir.join(format!("curve_mean_{}.csv", name.as_str())),
            &outcome.mean_curve(resolved.max_iter),
        )?;
        rows.push(summary_row(&resolved, *name, dim, outcome));
    }
    output::write_summary_csv(&out_dir.join("summary.csv"), &rows)?;

    output::write_json(
        &out_dir.join("manifest.json"),
        &CompareManifest {
            config: &resolved,
            benchmark: BenchmarkInfo::resolve(benchmark, dim),
            algorithms: outcomes
                .iter()
                .map(|(name, outcome)| CompareEntry {
                    name: name.as_str(),
                    runs: &outcome.records,
                    summary: outcome.summary,
                })
                .collect(),
        },
    )?;

    let refs: Vec<(AlgorithmName, &BatchOutcome)> = outcomes.iter().map(|(n, o)| (*n, o)).collect();
    print_rows(&refs);
    Ok(())
}

fn write_batch_curves(
    out_dir: &Path,
    algorithm: &str,
    outcome: &BatchOutcome,
) -> Result<(), CliError> {
    for (i, result) in outcome.results.iter().enumerate() {
        if let Some(result) = result {
            output::write_curve_csv(&out_dir.join(curve_file_name(algorithm, i)), &result.curve)?;
        }
    }
    Ok(())
}

fn summary_row<'a>(
    config: &'a ExperimentConfig,
    name: AlgorithmName,
    dim: usize,
    outcome: &BatchOutcome,
) -> SummaryRow<'a> {
    SummaryRow {
        algorithm: name.as_str(),
        benchmark: &config.benchmark,
        dim,
        pop: config.pop,
        max_iter: config.max_iter,
        runs: config.runs,
        succeeded: outcome.succeeded(),
        summary: outcome.summary,
    }
}

fn print_rows(outcomes: &[(AlgorithmName, &BatchOutcome)]) {
    println!(
        "{:<8} {:>6} {:>13} {:>13} {:>13} {:>13} {:>13}",
        "algo", "runs", "mean", "std", "median", "best", "worst"
    );
    for (name, outcome) in outcomes {
        match outcome.summary {
            Some(s) => println!(
                "{:<8} {:>6} {:>13.6e} {:>13.6e} {:>13.6e} {:>13.6e} {:>13.6e}",
                name.as_str(),
                outcome.succeeded(),
                s.mean,
                s.std,
                s.median,
                s.best,
                s.worst
            ),
            None => println!("{:<8} {:>6} (no successful runs)", name.as_str(), 0),
        }
    }
}

fn usage(e: msbwoa_core::Error) -> CliError {
    CliError::Usage(e.to_string())
}
