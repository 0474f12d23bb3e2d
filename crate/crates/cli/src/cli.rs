//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 on usage/config errors, 1 on internal errors.

use crate::config::{AlgorithmName, ExperimentConfig, InertiaVariant};
use crate::diagnostics::DiagnosticsKind;
use crate::{diagnostics, experiment, CliError};
use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "msbwoa",
    version,
    about = "Seedable black widow optimizer experiments on the classical benchmark suite"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one algorithm for a batch of seeded runs
    Run(RunArgs),
    /// Run several algorithms under one shared benchmark and budget
    Compare(CompareArgs),
    /// Export strategy diagnostics (inertia curves, map distributions)
    Diagnostics(DiagnosticsArgs),
    /// Print the benchmark registry as JSON
    Benchmarks(BenchmarksArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Benchmark id, F1..F23
    #[arg(long)]
    benchmark: Option<String>,
    /// Dimension (scalable benchmarks only)
    #[arg(long)]
    dim: Option<usize>,
    /// Population size
    #[arg(long)]
    pop: Option<usize>,
    /// Iterations per run
    #[arg(long)]
    iters: Option<usize>,
    /// Independent runs (seeds base, base+1, ...)
    #[arg(long)]
    runs: Option<usize>,
    /// Base seed
    #[arg(long)]
    seed: Option<u64>,
    /// JSON config file; flags override file values
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output directory
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Parallel worker threads for the batch (default: all cores)
    #[arg(long)]
    jobs: Option<usize>,
}

impl CommonArgs {
    /// File config (if any) with flag overrides applied.
    fn resolve(&self) -> Result<ExperimentConfig, CliError> {
        let mut config = match &self.config {
            Some(path) => ExperimentConfig::load(path)?,
            None => ExperimentConfig::default(),
        };
        if let Some(benchmark) = &self.benchmark {
            config.benchmark = benchmark.clone();
        }
        if self.dim.is_some() {
            config.dim = self.dim;
        }
        if let Some(pop) = self.pop {
            config.pop = pop;
        }
        if let Some(iters) = self.iters {
            config.max_iter = iters;
        }
        if let Some(runs) = self.runs {
            config.runs = runs;
        }
        if let Some(seed) = self.seed {
            config.seed = seed;
        }
        Ok(config)
    }
}

#[derive(Args)]
struct RunArgs {
    /// Algorithm to run
    #[arg(long)]
    algo: Option<AlgorithmName>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct CompareArgs {
    /// Comma-separated algorithms (default: all four)
    #[arg(long, value_delimiter = ',')]
    algos: Option<Vec<AlgorithmName>>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct DiagnosticsArgs {
    /// Which diagnostic to export
    #[arg(long)]
    kind: DiagnosticsKind,
    /// Iterates (tent/sine) or schedule rows (inertia/schedules)
    #[arg(long, default_value_t = 100_000)]
    n: usize,
    /// Tent map breakpoint
    #[arg(long)]
    tent_u: Option<f64>,
    /// Chaotic sequence seed value in (0, 1)
    #[arg(long)]
    x0: Option<f64>,
    /// RNG seed (absorbing-state escapes)
    #[arg(long)]
    seed: Option<u64>,
    /// Inertia variant for the nonlinear column
    #[arg(long)]
    variant: Option<InertiaVariant>,
    /// Constant-weight reference value
    #[arg(long)]
    constant_w: Option<f64>,
    /// Output directory
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct BenchmarksArgs {
    /// Write JSON here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses `argv` and executes; returns the process exit code.
pub fn main_with_args<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::parse_from(argv);
    match dispatch(cli) {
        Ok(()) => 0,
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            2
        }
        Err(CliError::Internal(message)) => {
            eprintln!("error: {message}");
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Run(args) => {
            let mut config = args.common.resolve()?;
            if let Some(algo) = args.algo {
                config.algorithm = algo;
            }
            with_jobs(args.common.jobs, || {
                experiment::run_experiment(&config, &args.common.out)
            })
        }
        Command::Compare(args) => {
            let config = args.common.resolve()?;
            let algorithms = args.algos.unwrap_or_else(|| AlgorithmName::ALL.to_vec());
            with_jobs(args.common.jobs, || {
                experiment::compare(&config, &algorithms, &args.common.out)
            })
        }
        Command::Diagnostics(args) => {
            let mut config = ExperimentConfig::default();
            if let Some(u) = args.tent_u {
                config.tent.u = u;
            }
            if let Some(x0) = args.x0 {
                config.tent.x0 = x0;
            }
            if let Some(seed) = args.seed {
                config.seed = seed;
            }
            if let Some(variant) = args.variant {
                config.inertia.variant = variant;
            }
            if let Some(constant) = args.constant_w {
                config.inertia.constant = constant;
            }
            let path = diagnostics::write(args.kind, args.n, &config, &args.out)?;
            println!("wrote {}", path.display());
            Ok(())
        }
        Command::Benchmarks(args) => {
            let specs = msbwoa_core::objectives::registry();
            match args.out {
                Some(path) => crate::output::write_json(&path, &specs),
                None => {
                    let text = serde_json::to_string_pretty(&specs)
                        .map_err(|e| CliError::Internal(e.to_string()))?;
                    println!("{text}");
                    Ok(())
                }
            }
        }
    }
}

/// Runs `f` inside a rayon pool of `jobs` threads when a limit is given.
fn with_jobs<F>(jobs: Option<usize>, f: F) -> Result<(), CliError>
where
    F: FnOnce() -> Result<(), CliError> + Send,
{
    match jobs {
        None => f(),
        Some(0) => Err(CliError::Usage("jobs must be at least 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Internal(format!("cannot build thread pool: {e}")))?
            .install(f),
    }
}
