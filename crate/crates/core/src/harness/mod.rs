//! Experiment orchestration: repeated seeded runs, summary statistics,
//! convergence traces, comparison with published numbers, and export.
//!
//! Run `i` of every cell uses seed `master_seed + i` (wrapping). Runs may
//! execute in parallel; results are gathered in run-index order, so reports
//! do not depend on scheduling.

mod config;
pub mod export;
pub mod presets;
pub mod reference;
pub mod stats;

use std::time::Instant;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::benchmarks::{BenchmarkFunction, Formulation, FunctionId};
use crate::error::Result;
use crate::optimizers::{run, Algorithm, OptimizerConfig, RunResult};
use crate::rng::RngStream;

pub use config::{ExperimentConfig, LdwSection, OutputPaths};
pub use reference::{compare_to_reference, ComparisonReport, Outcome, PublishedTable, ReferenceTable};
pub use stats::{classify_zero, SummaryStats, DEFAULT_ZERO_THRESHOLD};

/// How independent runs are scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Rayon's global pool, or the pool installed by the caller.
    #[cfg(feature = "parallel")]
    Parallel,
}

// Not derivable: the default variant depends on the `parallel` feature.
#[allow(clippy::derivable_impls)]
impl Default for Execution {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            Self::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            Self::Sequential
        }
    }
}

/// Applies `f` to every job, preserving job order in the output.
fn map_jobs<T, U, F>(execution: Execution, jobs: &[T], f: F) -> Result<Vec<U>>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Result<U> + Sync + Send,
{
    match execution {
        Execution::Sequential => jobs.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Execution::Parallel => jobs.par_iter().map(f).collect(),
    }
}

/// Aggregated outcome of one (function, algorithm, particle count) cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellResult {
    pub function: FunctionId,
    pub algorithm: Algorithm,
    pub particles: usize,
    pub iterations: usize,
    pub dimension: usize,
    pub runs: usize,
    /// Final best fitness of each run, in run-index order.
    pub finals: Vec<f64>,
    pub stats: SummaryStats,
    pub mean_classified: f64,
    /// Sum of per-run wall-clock times, when timing is recorded.
    pub wall_seconds: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub master_seed: u64,
    pub zero_threshold: f64,
    pub cells: Vec<CellResult>,
}

impl ExperimentReport {
    pub fn cell(&self, function: FunctionId, algorithm: Algorithm, particles: usize) -> Option<&CellResult> {
        self.cells
            .iter()
            .find(|c| c.function == function && c.algorithm == algorithm && c.particles == particles)
    }
}

fn optimizer_config(
    cfg: &ExperimentConfig,
    function: &BenchmarkFunction,
    algorithm: Algorithm,
    particles: usize,
    seed: u64,
) -> OptimizerConfig {
    let mut oc = OptimizerConfig::for_function(algorithm, function);
    oc.particles = particles;
    oc.max_iterations = cfg.iterations;
    oc.seed = seed;
    oc.weight_init = cfg.ldw.weight_init;
    oc.pso = cfg.pso;
    oc
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    run_experiment_with(cfg, Execution::default())
}

pub fn run_experiment_with(cfg: &ExperimentConfig, execution: Execution) -> Result<ExperimentReport> {
    cfg.validate()?;
    let cells = cfg.cells();
    let functions = cfg
        .functions
        .iter()
        .map(|&id| BenchmarkFunction::with_formulation(id, cfg.dimension, cfg.formulation))
        .collect::<Result<Vec<_>>>()?;

    let jobs: Vec<(usize, usize)> = (0..cells.len())
        .flat_map(|c| (0..cfg.runs).map(move |r| (c, r)))
        .collect();
    let outcomes = map_jobs(execution, &jobs, |&(c, r)| {
        let (function_index, algorithm, particles) = cells[c];
        let function = &functions[function_index];
        let seed = RngStream::child_seed(cfg.master_seed, r as u64);
        let oc = optimizer_config(cfg, function, algorithm, particles, seed);
        let start = Instant::now();
        let result = run(&oc, function)?;
        Ok((result.best_fitness, start.elapsed().as_secs_f64()))
    })?;

    let mut out = Vec::with_capacity(cells.len());
    for (chunk, &(function_index, algorithm, particles)) in outcomes.chunks(cfg.runs).zip(&cells) {
        let finals: Vec<f64> = chunk.iter().map(|(best, _)| *best).collect();
        let stats = SummaryStats::from_values(&finals)?;
        out.push(CellResult {
            function: functions[function_index].id,
            algorithm,
            particles,
            iterations: cfg.iterations,
            dimension: cfg.dimension,
            runs: cfg.runs,
            mean_classified: classify_zero(stats.mean, cfg.zero_threshold),
            wall_seconds: cfg.record_timing.then(|| chunk.iter().map(|(_, secs)| secs).sum()),
            finals,
            stats,
        });
    }
    Ok(ExperimentReport {
        master_seed: cfg.master_seed,
        zero_threshold: cfg.zero_threshold,
        cells: out,
    })
}

/// Settings for best-so-far trace export.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceConfig {
    pub functions: Vec<FunctionId>,
    pub algorithms: Vec<Algorithm>,
    pub particles: usize,
    pub iterations: usize,
    pub dimension: usize,
    pub seed: u64,
    pub formulation: Formulation,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceSeries {
    pub function: FunctionId,
    pub algorithm: Algorithm,
    pub seed: u64,
    /// `(iteration, best_fitness)` starting at iteration 0.
    pub points: Vec<(usize, f64)>,
}

impl ConvergenceSeries {
    fn from_run(result: &RunResult) -> Self {
        Self {
            function: result.function.id,
            algorithm: result.algorithm,
            seed: result.seed,
            points: result.trace.iter().map(|r| (r.iteration, r.best_fitness)).collect(),
        }
    }
}

/// One seeded run per algorithm on `function`.
pub fn convergence_trace(
    cfg: &ConvergenceConfig,
    function: FunctionId,
    algorithms: &[Algorithm],
) -> Result<Vec<ConvergenceSeries>> {
    let f = BenchmarkFunction::with_formulation(function, cfg.dimension, cfg.formulation)?;
    algorithms
        .iter()
        .map(|&algorithm| {
            let mut oc = OptimizerConfig::for_function(algorithm, &f);
            oc.particles = cfg.particles;
            oc.max_iterations = cfg.iterations;
            oc.seed = cfg.seed;
            run(&oc, &f).map(|r| ConvergenceSeries::from_run(&r))
        })
        .collect()
}

/// Traces for every function and algorithm in `cfg`, function-major.
pub fn convergence_traces(cfg: &ConvergenceConfig, execution: Execution) -> Result<Vec<ConvergenceSeries>> {
    let jobs: Vec<(FunctionId, Algorithm)> = cfg
        .functions
        .iter()
        .flat_map(|&f| cfg.algorithms.iter().map(move |&a| (f, a)))
        .collect();
    let nested = map_jobs(execution, &jobs, |&(f, a)| convergence_trace(cfg, f, &[a]))?;
    Ok(nested.into_iter().flatten().collect())
}
