//! Seedable uniform random source.
//!
//! Every stochastic decision in the crate goes through [`RandomSource`], so a
//! run is fully determined by its seed. [`RngStream`] is the production
//! implementation: xoshiro256++ seeded through SplitMix64 (the
//! `rand_xoshiro` 0.6.0 `seed_from_u64` scheme), with doubles formed from the
//! top 53 bits of each output. The crate version is pinned so recorded traces
//! stay reproducible; `tests::frozen_prefix` guards the exact sequence.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

const INV_2_POW_53: f64 = 1.0 / (1u64 << 53) as f64;

/// A source of uniform doubles in `[0, 1)`.
pub trait RandomSource {
    fn uniform01(&mut self) -> f64;

    /// Uniform draw in `[a, b)`, computed as `a + (b - a) * u`.
    ///
    /// The rare case where rounding lands on `b` is pulled back to the
    /// largest double below `b`.
    fn uniform_in(&mut self, a: f64, b: f64) -> f64 {
        let u = self.uniform01();
        let v = a + (b - a) * u;
        if v >= b {
            b.next_down()
        } else {
            v
        }
    }
}

impl<R: RandomSource + ?Sized> RandomSource for &mut R {
    fn uniform01(&mut self) -> f64 {
        (**self).uniform01()
    }
}

/// Deterministic stream keyed by a 64-bit seed.
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    inner: Xoshiro256PlusPlus,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            inner: Xoshiro256PlusPlus::seed_from_u64(seed),
        }
    }

    /// Seed of the `index`-th run of an experiment: `master + index`, wrapping.
    pub fn child_seed(master: u64, index: u64) -> u64 {
        master.wrapping_add(index)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }
}

impl RandomSource for RngStream {
    fn uniform01(&mut self) -> f64 {
        (self.inner.next_u64() >> 11) as f64 * INV_2_POW_53
    }
}

/// Replays a fixed list of draws, cycling when it runs out.
///
/// Used to drive the optimizers with hand-chosen random numbers and to count
/// how many draws an operation consumes.
#[derive(Debug, Clone)]
pub struct ScriptedRng {
    values: Vec<f64>,
    consumed: usize,
}

impl ScriptedRng {
    /// # Panics
    /// If `values` is empty or holds a value outside `[0, 1)`.
    pub fn new(values: Vec<f64>) -> Self {
        assert!(!values.is_empty(), "script must not be empty");
        assert!(
            values.iter().all(|v| (0.0..1.0).contains(v)),
            "scripted draws must lie in [0, 1)"
        );
        Self { values, consumed: 0 }
    }

    /// Number of draws taken so far.
    pub fn consumed(&self) -> usize {
        self.consumed
    }
}

impl RandomSource for ScriptedRng {
    fn uniform01(&mut self) -> f64 {
        let v = self.values[self.consumed % self.values.len()];
        self.consumed += 1;
        v
    }
}
