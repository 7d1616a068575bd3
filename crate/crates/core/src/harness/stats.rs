use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Magnitude below which reported values print as zero.
pub const DEFAULT_ZERO_THRESHOLD: f64 = 1e-16;

/// `0` when `|v| < threshold`, otherwise `v`. Reporting only.
pub fn classify_zero(v: f64, threshold: f64) -> f64 {
    if v.abs() < threshold {
        0.0
    } else {
        v
    }
}

/// Aggregate of the final best fitness over repeated runs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SummaryStats {
    pub mean: f64,
    /// Sample standard deviation (n − 1 denominator); 0 for a single run.
    pub sd: f64,
    pub best: f64,
    pub worst: f64,
    pub median: f64,
}

impl SummaryStats {
    /// Values are sorted before summation, so any permutation of the input
    /// yields bit-identical statistics.
    pub fn from_values(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidConfig("no values to summarize".into()));
        }
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        let n = sorted.len();
        let mean = sorted.iter().sum::<f64>() / n as f64;
        // Deviations are rescaled by the largest one so that squaring neither
        // underflows (finals near 1e-280 are routine) nor overflows.
        let scale = sorted.iter().map(|v| (v - mean).abs()).fold(0.0, f64::max);
        let sd = if n > 1 && scale > 0.0 && scale.is_finite() {
            let ss: f64 = sorted.iter().map(|v| ((v - mean) / scale).powi(2)).sum();
            scale * (ss / (n - 1) as f64).sqrt()
        } else if n > 1 && !scale.is_finite() {
            f64::INFINITY
        } else {
            0.0
        };
        let median = if n % 2 == 1 {
            sorted[n / 2]
        } else {
            (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
        };
        Ok(Self {
            mean,
            sd,
            best: sorted[0],
            worst: sorted[n - 1],
            median,
        })
    }
}
