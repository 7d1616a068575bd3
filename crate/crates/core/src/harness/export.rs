//! CSV, JSON and plain-text renderings of harness reports.
//!
//! Floats are written with Rust's shortest round-trip `{:e}` form, so a CSV
//! re-parses to the exact bits that were measured and two runs with the same
//! seed produce identical bytes. `wall_seconds` is left empty unless timing
//! was requested.

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};

use super::reference::ComparisonReport;
use super::{CellResult, ConvergenceSeries};

pub const RESULTS_HEADER: [&str; 13] = [
    "function",
    "algorithm",
    "particles",
    "iterations",
    "dimension",
    "runs",
    "mean",
    "sd",
    "best",
    "worst",
    "median",
    "mean_classified",
    "wall_seconds",
];

pub const CONVERGENCE_HEADER: [&str; 4] = ["function", "algorithm", "iteration", "best_fitness"];

fn num(v: f64) -> String {
    format!("{v:e}")
}

pub fn write_results_csv<W: Write>(out: W, cells: &[CellResult]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(RESULTS_HEADER)?;
    for c in cells {
        w.write_record([
            c.function.to_string(),
            c.algorithm.as_str().to_string(),
            c.particles.to_string(),
            c.iterations.to_string(),
            c.dimension.to_string(),
            c.runs.to_string(),
            num(c.stats.mean),
            num(c.stats.sd),
            num(c.stats.best),
            num(c.stats.worst),
            num(c.stats.median),
            num(c.mean_classified),
            c.wall_seconds.map(num).unwrap_or_default(),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn write_convergence_csv<W: Write>(out: W, series: &[ConvergenceSeries]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CONVERGENCE_HEADER)?;
    for s in series {
        for &(iteration, best) in &s.points {
            w.write_record([
                s.function.to_string(),
                s.algorithm.as_str().to_string(),
                iteration.to_string(),
                num(best),
            ])?;
        }
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn results_csv(cells: &[CellResult]) -> Result<String> {
    let mut buf = Vec::new();
    write_results_csv(&mut buf, cells)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

pub fn convergence_csv(series: &[ConvergenceSeries]) -> Result<String> {
    let mut buf = Vec::new();
    write_convergence_csv(&mut buf, series)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

/// Writes `contents` to `path`, reporting failures as [`Error::Write`].
pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| Error::Write {
        path: path.to_path_buf(),
        source,
    })
}

/// Aligned table of the summary columns.
pub fn results_text(cells: &[CellResult]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<4} {:<9} {:>4} {:>6} {:>4} {:>5}  {:>12} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "fn", "algorithm", "pn", "iters", "dim", "runs", "mean", "sd", "best", "worst", "median", "mean(cls)"
    );
    for c in cells {
        let _ = writeln!(
            s,
            "{:<4} {:<9} {:>4} {:>6} {:>4} {:>5}  {:>12.4e} {:>12.4e} {:>12.4e} {:>12.4e} {:>12.4e} {:>12.4e}",
            c.function.to_string(),
            c.algorithm.as_str(),
            c.particles,
            c.iterations,
            c.dimension,
            c.runs,
            c.stats.mean,
            c.stats.sd,
            c.stats.best,
            c.stats.worst,
            c.stats.median,
            c.mean_classified,
        );
    }
    s
}

/// One row per function: measured mean, then the outcome against each
/// published competitor.
pub fn comparison_text(report: &ComparisonReport) -> String {
    let mut s = String::new();
    let _ = write!(s, "{:<4} {:>12}", "fn", "measured");
    for name in &report.competitors {
        let _ = write!(s, " {name:>8}");
    }
    let _ = writeln!(s, "  best");
    for f in &report.functions {
        let _ = write!(s, "{:<4} {:>12.4e}", f.function.to_string(), f.measured_mean);
        for name in &report.competitors {
            let _ = write!(s, " {:>8}", f.outcomes[name].to_string());
        }
        let _ = writeln!(s, "  {}", if f.best_overall { "yes" } else { "no" });
    }
    let _ = writeln!(
        s,
        "LDW-SCSA best or tied on {} of {} functions ({}; published values are not measured)",
        report.best_count,
        report.functions.len(),
        report.table
    );
    s
}
