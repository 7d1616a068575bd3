//! Population optimizers sharing one minimization loop.
//!
//! A run draws every random number from a single [`RandomSource`] in a fixed
//! order, so `(config, seed)` determines the whole trace:
//!
//! 1. initial positions, particle by particle, coordinate by coordinate;
//! 2. one evaluation per particle (f7 draws its noise here);
//! 3. per iteration and particle: the algorithm's coefficients, then one draw
//!    per out-of-bounds coordinate during repair, then the evaluation.
//!
//! The global best is replaced as soon as a particle improves on it, so later
//! particles of the same iteration already move toward the new best.

mod ldw;
mod pso;
mod sca;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::benchmarks::BenchmarkFunction;
use crate::error::{Error, Result};
use crate::rng::{RandomSource, RngStream};
use crate::weight::{init_weight, LogisticWeightGenerator, WeightInit};

pub use ldw::{ldw_position_update, ldw_step, ldw_velocity};
pub use pso::{pso_step, PsoState};
pub use sca::sca_step;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    LdwScsa,
    Sca,
    Pso,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Self::LdwScsa, Self::Sca, Self::Pso];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::LdwScsa => "ldw_scsa",
            Self::Sca => "sca",
            Self::Pso => "pso",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "ldw_scsa" | "ldw_sca" | "ldw" => Ok(Self::LdwScsa),
            "sca" => Ok(Self::Sca),
            "pso" => Ok(Self::Pso),
            _ => Err(Error::UnknownAlgorithm(s.to_string())),
        }
    }
}

/// Inertia and acceleration coefficients of the gbest PSO baseline.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct PsoParams {
    pub inertia: f64,
    pub cognitive: f64,
    pub social: f64,
}

impl Default for PsoParams {
    fn default() -> Self {
        // Clerc–Kennedy constriction values.
        Self {
            inertia: 0.7298,
            cognitive: 1.49618,
            social: 1.49618,
        }
    }
}

/// Granularity of the sine-cosine coefficient draws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoefficientSampling {
    /// One set of r1..r4 per particle update, shared by all coordinates.
    PerParticle,
    /// A fresh set of r1..r4 for every coordinate.
    PerCoordinate,
}

/// Draw ranges of r1, r2, r3 (r4 is always uniform on `[0, 1)`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SineCosineParams {
    pub r1: (f64, f64),
    pub r2: (f64, f64),
    pub r3: (f64, f64),
    pub sampling: CoefficientSampling,
}

impl SineCosineParams {
    /// LDW-SCSA: r1, r2, r3 on `[-2, 2]`, one draw per particle update.
    pub const LDW_SCSA: Self = Self {
        r1: (-2.0, 2.0),
        r2: (-2.0, 2.0),
        r3: (-2.0, 2.0),
        sampling: CoefficientSampling::PerParticle,
    };

    /// Sine-cosine algorithm: r1 on `[0, 2]` (no decay schedule), r2 on
    /// `[0, 2π]`, r3 on `[0, 2]`, drawn per coordinate.
    pub const SCA: Self = Self {
        r1: (0.0, 2.0),
        r2: (0.0, 2.0 * std::f64::consts::PI),
        r3: (0.0, 2.0),
        sampling: CoefficientSampling::PerCoordinate,
    };

    pub fn default_for(algorithm: Algorithm) -> Self {
        match algorithm {
            Algorithm::Sca => Self::SCA,
            _ => Self::LDW_SCSA,
        }
    }

    fn validate(&self) -> Result<()> {
        for (name, (lo, hi)) in [("r1", self.r1), ("r2", self.r2), ("r3", self.r3)] {
            if !(lo.is_finite() && hi.is_finite() && hi > lo) {
                return Err(Error::InvalidConfig(format!(
                    "{name} range [{lo}, {hi}] must be finite and non-empty"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimizerConfig {
    pub algorithm: Algorithm,
    pub particles: usize,
    pub max_iterations: usize,
    pub dimension: usize,
    pub lower: f64,
    pub upper: f64,
    pub seed: u64,
    /// Stop once the best fitness is at or below this value. Checked after
    /// each full iteration.
    pub target_fitness: Option<f64>,
    pub pso: PsoParams,
    pub weight_init: WeightInit,
    /// Coefficient ranges of LDW-SCSA and SCA; unused by PSO.
    pub sine_cosine: SineCosineParams,
}

impl OptimizerConfig {
    /// 40 particles, 500 iterations, the function's own box and dimension.
    pub fn for_function(algorithm: Algorithm, function: &BenchmarkFunction) -> Self {
        let (lower, upper) = function.bounds();
        Self {
            algorithm,
            particles: 40,
            max_iterations: 500,
            dimension: function.dimension,
            lower,
            upper,
            seed: DEFAULT_SEED,
            target_fitness: None,
            pso: PsoParams::default(),
            weight_init: WeightInit::default(),
            sine_cosine: SineCosineParams::default_for(algorithm),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.particles < 2 {
            return bad(format!("need at least 2 particles, got {}", self.particles));
        }
        if self.max_iterations < 1 {
            return bad("max_iterations must be at least 1".into());
        }
        if self.dimension < 1 {
            return bad("dimension must be at least 1".into());
        }
        if !(self.lower.is_finite() && self.upper.is_finite() && self.upper > self.lower) {
            return bad(format!(
                "bounds [{}, {}] must be finite with upper > lower",
                self.lower, self.upper
            ));
        }
        self.sine_cosine.validate()
    }

    fn validate_for(&self, function: &BenchmarkFunction) -> Result<()> {
        self.validate()?;
        if self.dimension != function.dimension {
            return Err(Error::DimensionMismatch {
                expected: function.dimension,
                got: self.dimension,
            });
        }
        let (lo, hi) = function.bounds();
        if self.lower < lo || self.upper > hi {
            return Err(Error::InvalidConfig(format!(
                "search box [{}, {}] exceeds the domain [{lo}, {hi}] of {}",
                self.lower, self.upper, function.id
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Particle {
    pub position: Vec<f64>,
    pub fitness: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SwarmState {
    pub particles: Vec<Particle>,
    pub best_position: Vec<f64>,
    /// Lowest fitness evaluated so far.
    pub best_fitness: f64,
    pub iteration: usize,
    /// Weight used in the latest iteration (LDW-SCSA only).
    pub weight: Option<f64>,
}

impl SwarmState {
    fn offer(&mut self, position: &[f64], fitness: f64) {
        if fitness < self.best_fitness {
            self.best_fitness = fitness;
            self.best_position.clear();
            self.best_position.extend_from_slice(position);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IterationRecord {
    pub iteration: usize,
    pub best_fitness: f64,
    pub weight: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub algorithm: Algorithm,
    pub function: BenchmarkFunction,
    pub seed: u64,
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
    /// Iteration 0 (after the initial sweep) followed by one record per
    /// executed iteration.
    pub trace: Vec<IterationRecord>,
    pub iterations: usize,
    pub evaluations: usize,
}

/// Counting wrapper around a benchmark function.
///
/// Rejects infeasible points and maps NaN to `+∞` so comparisons stay total.
#[derive(Debug, Clone)]
pub struct Objective<'a> {
    function: &'a BenchmarkFunction,
    evaluations: usize,
}

impl<'a> Objective<'a> {
    pub fn new(function: &'a BenchmarkFunction) -> Self {
        Self {
            function,
            evaluations: 0,
        }
    }

    pub fn evaluate<R: RandomSource + ?Sized>(&mut self, x: &[f64], rng: &mut R) -> Result<f64> {
        let v = self.function.evaluate(x, rng)?;
        self.evaluations += 1;
        Ok(if v.is_nan() { f64::INFINITY } else { v })
    }

    pub fn evaluations(&self) -> usize {
        self.evaluations
    }
}

/// The four sine-cosine coefficients drawn once per particle update.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SineCosineDraws {
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
    pub r4: f64,
}

impl SineCosineDraws {
    /// Draws r1, r2, r3 from their ranges, in that order, then r4.
    pub fn draw<R: RandomSource + ?Sized>(params: &SineCosineParams, rng: &mut R) -> Self {
        let r1 = rng.uniform_in(params.r1.0, params.r1.1);
        let r2 = rng.uniform_in(params.r2.0, params.r2.1);
        let r3 = rng.uniform_in(params.r3.0, params.r3.1);
        let r4 = rng.uniform01();
        Self { r1, r2, r3, r4 }
    }

    /// `r1·sin(r2)` when `r4 < 0.5`, otherwise `r1·cos(r2)`.
    pub fn oscillation(&self) -> f64 {
        if self.r4 < 0.5 {
            self.r1 * self.r2.sin()
        } else {
            self.r1 * self.r2.cos()
        }
    }
}

/// `particles` uniform positions in `[lower, upper)ⁿ`.
pub fn init_positions<R: RandomSource + ?Sized>(cfg: &OptimizerConfig, rng: &mut R) -> Vec<Vec<f64>> {
    (0..cfg.particles)
        .map(|_| {
            (0..cfg.dimension)
                .map(|_| rng.uniform_in(cfg.lower, cfg.upper))
                .collect()
        })
        .collect()
}

/// Replaces every coordinate outside `[lower, upper]` (or NaN) by a fresh
/// uniform draw. Returns the number of replaced coordinates.
pub fn boundary_repair<R: RandomSource + ?Sized>(p: &mut [f64], lower: f64, upper: f64, rng: &mut R) -> usize {
    let mut repaired = 0;
    for x in p.iter_mut() {
        if !(*x >= lower && *x <= upper) {
            *x = rng.uniform_in(lower, upper);
            repaired += 1;
        }
    }
    repaired
}

/// Samples and evaluates the initial swarm.
pub fn initialize<R: RandomSource + ?Sized>(
    cfg: &OptimizerConfig,
    objective: &mut Objective<'_>,
    rng: &mut R,
) -> Result<SwarmState> {
    let positions = init_positions(cfg, rng);
    let mut particles = Vec::with_capacity(positions.len());
    for position in positions {
        let fitness = objective.evaluate(&position, rng)?;
        particles.push(Particle { position, fitness });
    }
    let mut best = 0;
    for (i, p) in particles.iter().enumerate().skip(1) {
        if p.fitness < particles[best].fitness {
            best = i;
        }
    }
    let state = SwarmState {
        best_position: particles[best].position.clone(),
        best_fitness: particles[best].fitness,
        particles,
        iteration: 0,
        weight: None,
    };
    Ok(state)
}

/// Runs `cfg` on `function` with a stream seeded from `cfg.seed`.
pub fn run(cfg: &OptimizerConfig, function: &BenchmarkFunction) -> Result<RunResult> {
    let mut rng = RngStream::new(cfg.seed);
    run_with(cfg, function, &mut rng)
}

/// Runs `cfg` on `function` drawing from `rng` instead of `cfg.seed`.
pub fn run_with<R: RandomSource + ?Sized>(
    cfg: &OptimizerConfig,
    function: &BenchmarkFunction,
    rng: &mut R,
) -> Result<RunResult> {
    cfg.validate_for(function)?;
    let mut objective = Objective::new(function);
    let state = initialize(cfg, &mut objective, rng)?;
    let mut trace = Vec::with_capacity(cfg.max_iterations + 1);
    trace.push(IterationRecord {
        iteration: 0,
        best_fitness: state.best_fitness,
        weight: None,
    });

    let reached = |best: f64| cfg.target_fitness.is_some_and(|t| best <= t);

    let state = match cfg.algorithm {
        Algorithm::LdwScsa => {
            let mut state = state;
            let w1 = init_weight(&state.best_position, cfg.lower, cfg.upper, cfg.weight_init)?;
            let mut weights = LogisticWeightGenerator::new(w1);
            for _ in 0..cfg.max_iterations {
                let w = weights.weight();
                ldw_step(&mut state, w, cfg, &mut objective, rng)?;
                weights.logistic_next();
                trace.push(record(&state));
                if reached(state.best_fitness) {
                    break;
                }
            }
            state
        }
        Algorithm::Sca => {
            let mut state = state;
            for _ in 0..cfg.max_iterations {
                sca_step(&mut state, cfg, &mut objective, rng)?;
                trace.push(record(&state));
                if reached(state.best_fitness) {
                    break;
                }
            }
            state
        }
        Algorithm::Pso => {
            let mut pso = PsoState::new(state);
            for _ in 0..cfg.max_iterations {
                pso_step(&mut pso, cfg, &mut objective, rng)?;
                trace.push(record(&pso.swarm));
                if reached(pso.swarm.best_fitness) {
                    break;
                }
            }
            pso.swarm
        }
    };

    Ok(RunResult {
        algorithm: cfg.algorithm,
        function: *function,
        seed: cfg.seed,
        iterations: state.iteration,
        best_position: state.best_position,
        best_fitness: state.best_fitness,
        trace,
        evaluations: objective.evaluations(),
    })
}

fn record(state: &SwarmState) -> IterationRecord {
    IterationRecord {
        iteration: state.iteration,
        best_fitness: state.best_fitness,
        weight: state.weight,
    }
}
