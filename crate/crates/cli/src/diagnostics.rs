//! Strategy diagnostics: inertia-weight comparison curves, chaotic map
//! iterate dumps with histogram summaries, and the full schedule envelope.

use crate::config::{ExperimentConfig, InertiaVariant};
use crate::CliError;
use msbwoa_core::chaos::{chaotic_sequence, MapKind, TentMapParams};
use msbwoa_core::msbwoa::{u_schedule, InertiaWeight};
use msbwoa_core::SeededRng;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
#[clap(rename_all = "lowercase")]
pub enum DiagnosticsKind {
    Inertia,
    Tent,
    Sine,
    Schedules,
}

impl DiagnosticsKind {
    pub fn file_name(self) -> &'static str {
        match self {
            Self::Inertia => "inertia.csv",
            Self::Tent => "tent.csv",
            Self::Sine => "sine.csv",
            Self::Schedules => "schedules.csv",
        }
    }
}

/// Writes the requested diagnostics CSV into `out_dir` and returns its path.
pub fn write(
    kind: DiagnosticsKind,
    n: usize,
    config: &ExperimentConfig,
    out_dir: &Path,
) -> Result<std::path::PathBuf, CliError> {
    if n < 1 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    std::fs::create_dir_all(out_dir)?;
    let path = out_dir.join(kind.file_name());
    let mut w = BufWriter::new(File::create(&path)?);
    match kind {
        DiagnosticsKind::Inertia => write_inertia(&mut w, n, config)?,
        DiagnosticsKind::Schedules => write_schedules(&mut w, n, config)?,
        DiagnosticsKind::Tent => write_map(&mut w, n, config, MapKind::Tent)?,
        DiagnosticsKind::Sine => write_map(&mut w, n, config, MapKind::Sine)?,
    }
    w.flush()?;
    Ok(path)
}

/// Iteration grid for schedule diagnostics: `n` rows reach the endpoint, so
/// the final row shows the terminal weight.
fn t_max_for(n: usize) -> usize {
    (n - 1).max(1)
}

fn write_inertia(w: &mut impl Write, n: usize, config: &ExperimentConfig) -> Result<(), CliError> {
    let nonlinear = match config.inertia.variant {
        // The constant variant has no nonlinear curve to plot; fall back to
        // the default schedule for the comparison column.
        InertiaVariant::Constant => InertiaWeight::CosSinSqrt,
        other => crate::config::InertiaSection {
            variant: other,
            constant: config.inertia.constant,
        }
        .to_weight(),
    };
    let constant = config.inertia.constant;
    let t_max = t_max_for(n);
    writeln!(w, "iteration,w_nonlinear,w_constant")?;
    for t in 0..n {
        writeln!(w, "{t},{},{constant}", nonlinear.weight(t, t_max))?;
    }
    Ok(())
}

fn write_schedules(
    w: &mut impl Write,
    n: usize,
    config: &ExperimentConfig,
) -> Result<(), CliError> {
    let weight = config.inertia.to_weight();
    let t_max = t_max_for(n);
    writeln!(w, "iteration,w,k_min,k_max,u")?;
    for t in 0..n {
        let frac = t as f64 / t_max as f64;
        // k = 1 - r (1 - frac^2) over r in [0, 1]: envelope [frac^2, 1].
        writeln!(
            w,
            "{t},{},{},1,{}",
            weight.weight(t, t_max),
            frac * frac,
            u_schedule(t, t_max)
        )?;
    }
    Ok(())
}

fn write_map(
    w: &mut impl Write,
    n: usize,
    config: &ExperimentConfig,
    kind: MapKind,
) -> Result<(), CliError> {
    let params = TentMapParams {
        u: config.tent.u,
        x0: config.tent.x0,
    };
    params
        .validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let mut rng = SeededRng::new(config.seed);
    let values = chaotic_sequence(&params, n, kind, &mut rng);

    writeln!(w, "value")?;
    for value in &values {
        writeln!(w, "{value}")?;
    }

    let mut bins = [0usize; 10];
    for &value in &values {
        bins[((value * 10.0) as usize).min(9)] += 1;
    }
    writeln!(w, "# histogram bins=10")?;
    writeln!(w, "# bin_lo,bin_hi,count,frequency")?;
    for (i, &count) in bins.iter().enumerate() {
        writeln!(
            w,
            "# {},{},{count},{}",
            i as f64 / 10.0,
            (i + 1) as f64 / 10.0,
            count as f64 / n as f64
        )?;
    }
    Ok(())
}
