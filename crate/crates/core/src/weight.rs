//! Chaotic dynamic weight schedule driven by the logistic map.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Double-precision machine epsilon, the offset that keeps weights off 0 and 1.
pub const EPS: f64 = f64::EPSILON;

/// Multiplier of the fully chaotic logistic map.
pub const DEFAULT_CHAOS_MULTIPLIER: f64 = 4.0;

/// Lower end of the chaotic regime of the logistic map.
pub const MIN_CHAOS_MULTIPLIER: f64 = 3.57;

/// How the first weight of a run is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightInit {
    /// `‖best position‖₂ / ‖(ub − lb)·1ₙ‖₂`, clamped into `(0, 1)`.
    #[default]
    Pseudocode,
    /// The constant [`EPS`].
    Eps,
}

impl std::str::FromStr for WeightInit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pseudocode" => Ok(Self::Pseudocode),
            "eps" => Ok(Self::Eps),
            other => Err(Error::InvalidConfig(format!(
                "unknown weight init mode `{other}` (expected pseudocode or eps)"
            ))),
        }
    }
}

/// Maps a raw weight into the open interval: `≥ 1` becomes `1 − eps`, `≤ 0`
/// becomes `eps`.
pub fn clamp_weight(w: f64) -> f64 {
    if w >= 1.0 {
        1.0 - EPS
    } else if w <= 0.0 || w.is_nan() {
        EPS
    } else {
        w
    }
}

/// Initial weight for a run whose best position after the first sweep is
/// `best_position`.
pub fn init_weight(best_position: &[f64], lb: f64, ub: f64, mode: WeightInit) -> Result<f64> {
    if ub.is_nan() || lb.is_nan() || ub <= lb {
        return Err(Error::InvalidConfig(format!(
            "upper bound {ub} must exceed lower bound {lb}"
        )));
    }
    match mode {
        WeightInit::Eps => Ok(EPS),
        WeightInit::Pseudocode => {
            let norm = best_position.iter().map(|x| x * x).sum::<f64>().sqrt();
            let span = (ub - lb) * (best_position.len() as f64).sqrt();
            Ok(clamp_weight(norm / span))
        }
    }
}

/// Current weight `w ∈ (0, 1)` and the map that advances it.
#[derive(Debug, Clone, PartialEq)]
pub struct LogisticWeightGenerator {
    w: f64,
    chaos_multiplier: f64,
}

impl LogisticWeightGenerator {
    /// Starts from `w0` (clamped into the open interval) with multiplier 4.
    pub fn new(w0: f64) -> Self {
        Self {
            w: clamp_weight(w0),
            chaos_multiplier: DEFAULT_CHAOS_MULTIPLIER,
        }
    }

    pub fn with_multiplier(w0: f64, chaos_multiplier: f64) -> Result<Self> {
        if !(MIN_CHAOS_MULTIPLIER..=DEFAULT_CHAOS_MULTIPLIER).contains(&chaos_multiplier) {
            return Err(Error::InvalidConfig(format!(
                "chaos multiplier {chaos_multiplier} outside [3.57, 4]"
            )));
        }
        Ok(Self {
            w: clamp_weight(w0),
            chaos_multiplier,
        })
    }

    pub fn weight(&self) -> f64 {
        self.w
    }

    pub fn chaos_multiplier(&self) -> f64 {
        self.chaos_multiplier
    }

    /// Advances `w ← clamp(r·w·(1 − w))` and returns the new weight.
    pub fn logistic_next(&mut self) -> f64 {
        self.w = clamp_weight(self.chaos_multiplier * self.w * (1.0 - self.w));
        self.w
    }
}
