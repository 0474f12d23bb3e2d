//! CSV and JSON artifact writers.
//!
//! CSVs carry a header row, `.` decimal separator, and line-feed
//! terminators. Fitness values are written in scientific notation (Rust's
//! shortest round-trip form), so files from identical configs are
//! byte-identical.

use crate::CliError;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

pub fn write_curve_csv(path: &Path, curve: &[f64]) -> Result<(), CliError> {
    let mut w = writer(path)?;
    writeln!(w, "iteration,best_fitness")?;
    for (t, value) in curve.iter().enumerate() {
        writeln!(w, "{t},{value:e}")?;
    }
    Ok(w.flush()?)
}

pub fn write_mean_curve_csv(path: &Path, mean_curve: &[f64]) -> Result<(), CliError> {
    let mut w = writer(path)?;
    writeln!(w, "iteration,mean_best_fitness")?;
    for (t, value) in mean_curve.iter().enumerate() {
        writeln!(w, "{t},{value:e}")?;
    }
    Ok(w.flush()?)
}

/// One `summary.csv` row per algorithm.
pub struct SummaryRow<'a> {
    pub algorithm: &'a str,
    pub benchmark: &'a str,
    pub dim: usize,
    pub pop: usize,
    pub max_iter: usize,
    pub runs: usize,
    pub succeeded: usize,
    pub summary: Option<crate::stats::StatsSummary>,
}

pub fn write_summary_csv(path: &Path, rows: &[SummaryRow<'_>]) -> Result<(), CliError> {
    let mut w = writer(path)?;
    writeln!(
        w,
        "algorithm,benchmark,dim,pop,max_iter,runs,succeeded,mean,std,median,best,worst"
    )?;
    for row in rows {
        write!(
            w,
            "{},{},{},{},{},{},{}",
            row.algorithm, row.benchmark, row.dim, row.pop, row.max_iter, row.runs, row.succeeded
        )?;
        match row.summary {
            Some(s) => writeln!(
                w,
                ",{:e},{:e},{:e},{:e},{:e}",
                s.mean, s.std, s.median, s.best, s.worst
            )?,
            None => writeln!(w, ",,,,,")?,
        }
    }
    Ok(w.flush()?)
}

pub fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut w = writer(path)?;
    serde_json::to_writer_pretty(&mut w, value)
        .map_err(|e| CliError::Internal(format!("cannot serialize {}: {e}", path.display())))?;
    writeln!(w)?;
    Ok(w.flush()?)
}

fn writer(path: &Path) -> Result<BufWriter<File>, CliError> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    Ok(BufWriter::new(File::create(path)?))
}
