//! Logistic dynamic weight sine-cosine search (LDW-SCSA), with the plain
//! sine-cosine algorithm and gbest particle swarm optimization as baselines,
//! a suite of thirteen numerical test functions, and an experiment harness.
//!
//! ```
//! use ldw_scsa::benchmarks::{BenchmarkFunction, FunctionId};
//! use ldw_scsa::optimizers::{run, Algorithm, OptimizerConfig};
//!
//! let sphere = BenchmarkFunction::new(FunctionId::F1, 10).unwrap();
//! let mut cfg = OptimizerConfig::for_function(Algorithm::LdwScsa, &sphere);
//! cfg.max_iterations = 200;
//! let result = run(&cfg, &sphere).unwrap();
//! assert!(result.best_fitness < 1e-20);
//! ```

pub mod benchmarks;
pub mod error;
pub mod harness;
pub mod optimizers;
pub mod rng;
pub mod weight;

pub use error::{Error, Result};
