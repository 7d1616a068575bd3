use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::benchmarks::{Formulation, FunctionId, DEFAULT_DIMENSION};
use crate::error::{Error, Result};
use crate::optimizers::{Algorithm, PsoParams, DEFAULT_SEED};
use crate::weight::WeightInit;

use super::stats::DEFAULT_ZERO_THRESHOLD;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LdwSection {
    pub weight_init: WeightInit,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OutputPaths {
    /// Results CSV.
    pub results: Option<PathBuf>,
    /// JSON mirror of the results.
    pub json: Option<PathBuf>,
}

/// A grid of (function × algorithm × particle count) cells, each run `runs`
/// times.
///
/// Loaded from TOML; every key is optional and defaults to the 40-particle,
/// 500-iteration, dimension-30, 10-run protocol over all functions:
///
/// ```toml
/// functions = ["f1", "f9"]
/// algorithms = ["ldw_scsa", "sca", "pso"]
/// particles = [40]
/// iterations = 500
/// dimension = 30
/// runs = 10
/// master_seed = 1
/// zero_threshold = 1e-16
/// formulation = "standard"   # or "literal"
/// record_timing = false
///
/// [ldw]
/// weight_init = "pseudocode" # or "eps"
///
/// [pso]
/// inertia = 0.7298
/// cognitive = 1.49618
/// social = 1.49618
///
/// [output]
/// results = "results.csv"
/// json = "results.json"
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub functions: Vec<FunctionId>,
    pub algorithms: Vec<Algorithm>,
    pub particles: Vec<usize>,
    pub iterations: usize,
    pub dimension: usize,
    pub runs: usize,
    pub master_seed: u64,
    pub zero_threshold: f64,
    pub formulation: Formulation,
    /// Fill the `wall_seconds` column. Off by default so reruns are
    /// byte-identical.
    pub record_timing: bool,
    pub ldw: LdwSection,
    pub pso: PsoParams,
    pub output: OutputPaths,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            functions: FunctionId::ALL.to_vec(),
            algorithms: vec![Algorithm::LdwScsa],
            particles: vec![40],
            iterations: 500,
            dimension: DEFAULT_DIMENSION,
            runs: 10,
            master_seed: DEFAULT_SEED,
            zero_threshold: DEFAULT_ZERO_THRESHOLD,
            formulation: Formulation::Standard,
            record_timing: false,
            ldw: LdwSection::default(),
            pso: PsoParams::default(),
            output: OutputPaths::default(),
        }
    }
}

impl ExperimentConfig {
    pub fn from_toml_str(s: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(s)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Read {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_toml_str(&text)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("experiment config serializes")
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidConfig(msg.to_string()));
        if self.functions.is_empty() {
            return bad("at least one function is required");
        }
        if self.algorithms.is_empty() {
            return bad("at least one algorithm is required");
        }
        if self.particles.is_empty() || self.particles.iter().any(|&p| p < 2) {
            return bad("particle counts must be non-empty and each at least 2");
        }
        if self.iterations < 1 {
            return bad("iterations must be at least 1");
        }
        if self.dimension < 1 {
            return bad("dimension must be at least 1");
        }
        if self.runs < 1 {
            return bad("runs must be at least 1");
        }
        if self.zero_threshold.is_nan() || self.zero_threshold <= 0.0 {
            return bad("zero_threshold must be positive");
        }
        Ok(())
    }

    /// `(function index, algorithm, particles)` in function-major order.
    pub(super) fn cells(&self) -> Vec<(usize, Algorithm, usize)> {
        let mut out = Vec::new();
        for f in 0..self.functions.len() {
            for &a in &self.algorithms {
                for &p in &self.particles {
                    out.push((f, a, p));
                }
            }
        }
        out
    }
}
