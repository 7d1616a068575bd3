//! The fixed experiment protocols: the particle-count sweep, the three-way
//! comparison against published numbers, and the convergence-figure traces.

use serde::{Deserialize, Serialize};

use crate::benchmarks::{Formulation, FunctionId, DEFAULT_DIMENSION};
use crate::error::Result;
use crate::optimizers::{Algorithm, DEFAULT_SEED};

use super::reference::{compare_to_reference, ComparisonReport, PublishedTable, ReferenceTable};
use super::{run_experiment_with, ConvergenceConfig, Execution, ExperimentConfig, ExperimentReport};

pub const TABLE1_PARTICLES: [usize; 6] = [10, 20, 30, 40, 50, 60];
pub const PROTOCOL_ITERATIONS: usize = 500;
pub const PROTOCOL_RUNS: usize = 10;
pub const TABLE3_PARTICLES: usize = 40;
pub const CONVERGENCE_PARTICLES: usize = 30;
/// Functions shown in the convergence figures.
pub const FIGURE_FUNCTIONS: [FunctionId; 7] = [
    FunctionId::F1,
    FunctionId::F3,
    FunctionId::F4,
    FunctionId::F7,
    FunctionId::F9,
    FunctionId::F11,
    FunctionId::F12,
];

/// LDW-SCSA over every particle count in [`TABLE1_PARTICLES`].
pub fn table1_config(functions: Vec<FunctionId>, master_seed: u64) -> ExperimentConfig {
    ExperimentConfig {
        functions,
        algorithms: vec![Algorithm::LdwScsa],
        particles: TABLE1_PARTICLES.to_vec(),
        iterations: PROTOCOL_ITERATIONS,
        dimension: DEFAULT_DIMENSION,
        runs: PROTOCOL_RUNS,
        master_seed,
        ..ExperimentConfig::default()
    }
}

/// LDW-SCSA, SCA and PSO on all functions at 40 particles.
pub fn table3_config(master_seed: u64) -> ExperimentConfig {
    ExperimentConfig {
        functions: FunctionId::ALL.to_vec(),
        algorithms: Algorithm::ALL.to_vec(),
        particles: vec![TABLE3_PARTICLES],
        iterations: PROTOCOL_ITERATIONS,
        dimension: DEFAULT_DIMENSION,
        runs: PROTOCOL_RUNS,
        master_seed,
        ..ExperimentConfig::default()
    }
}

pub fn convergence_config(seed: u64) -> ConvergenceConfig {
    ConvergenceConfig {
        functions: FIGURE_FUNCTIONS.to_vec(),
        algorithms: vec![Algorithm::LdwScsa, Algorithm::Sca],
        particles: CONVERGENCE_PARTICLES,
        iterations: PROTOCOL_ITERATIONS,
        dimension: DEFAULT_DIMENSION,
        seed,
        formulation: Formulation::Standard,
    }
}

impl Default for ConvergenceConfig {
    fn default() -> Self {
        convergence_config(DEFAULT_SEED)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table3Report {
    pub experiment: ExperimentReport,
    pub comparison: ComparisonReport,
}

/// Runs `cfg` and compares its LDW-SCSA cells with the published table.
pub fn run_table3(cfg: &ExperimentConfig, execution: Execution) -> Result<Table3Report> {
    let experiment = run_experiment_with(cfg, execution)?;
    let comparison = compare_to_reference(&experiment.cells, ReferenceTable::published(), PublishedTable::Table3)?;
    Ok(Table3Report { experiment, comparison })
}
