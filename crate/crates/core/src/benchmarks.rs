//! The thirteen box-constrained test functions f1..f13.
//!
//! All functions are minimized. The default [`Formulation::Standard`] uses the
//! textbook forms whose minimum value is 0. [`Formulation::Literal`] switches
//! f7, f8, f10, f11 and f12 to alternative forms that keep the printed
//! coefficients:
//!
//! - f7: `Σ i·xᵢ + U[0,1)` (linear instead of quartic)
//! - f8: `Σ xᵢ² + 10cos(2πxᵢ) + 10` (plus sign on the cosine)
//! - f10: Griewank without the trailing `+ 1`
//! - f11: `10·sin(πy₁)` instead of `10·sin²(πy₁)`
//! - f12: `Σᵢ₌₁ⁿ (xᵢ − 1)²[1 + sin²(3πxᵢ + 1)]` as the middle sum

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::RandomSource;

/// Additive constant of Ackley's function: the double one ulp above the
/// nearest double to e (`0x4005BF0A8B14576A`), as returned by common `exp(1)`
/// implementations. With it the origin evaluates to exactly `4·eps`.
pub const ACKLEY_E: f64 = 2.7182818284590455;

/// Dimension used throughout the reference protocol.
pub const DEFAULT_DIMENSION: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FunctionId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
    F11,
    F12,
    F13,
}

impl FunctionId {
    pub const ALL: [FunctionId; 13] = [
        Self::F1,
        Self::F2,
        Self::F3,
        Self::F4,
        Self::F5,
        Self::F6,
        Self::F7,
        Self::F8,
        Self::F9,
        Self::F10,
        Self::F11,
        Self::F12,
        Self::F13,
    ];

    /// 1-based index, `F1 → 1`.
    pub fn index(self) -> usize {
        self as usize + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::F1 => "Sphere",
            Self::F2 => "Schwefel 2.22",
            Self::F3 => "Schwefel 1.2",
            Self::F4 => "Schwefel 2.21",
            Self::F5 => "Rosenbrock",
            Self::F6 => "Step",
            Self::F7 => "Quartic noise",
            Self::F8 => "Rastrigin",
            Self::F9 => "Ackley",
            Self::F10 => "Griewank",
            Self::F11 => "Generalized penalized 1",
            Self::F12 => "Generalized penalized 2",
            Self::F13 => "Alpine",
        }
    }

    /// Symmetric box `[-b, b]` applied to every coordinate.
    pub fn bounds(self) -> (f64, f64) {
        let b = match self {
            Self::F1 | Self::F3 | Self::F4 | Self::F6 => 100.0,
            Self::F2 | Self::F13 => 10.0,
            Self::F5 => 30.0,
            Self::F7 => 1.28,
            Self::F8 => 5.12,
            Self::F9 => 32.0,
            Self::F10 => 600.0,
            Self::F11 | Self::F12 => 50.0,
        };
        (-b, b)
    }

    pub fn modality(self) -> Modality {
        if self.index() <= 7 {
            Modality::Unimodal
        } else {
            Modality::Multimodal
        }
    }

    pub fn is_deterministic(self) -> bool {
        self != Self::F7
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.index())
    }
}

impl FromStr for FunctionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        lower
            .strip_prefix('f')
            .and_then(|n| n.parse::<usize>().ok())
            .filter(|n| (1..=13).contains(n))
            .map(|n| Self::ALL[n - 1])
            .ok_or_else(|| Error::UnknownFunction(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Modality {
    Unimodal,
    Multimodal,
}

impl fmt::Display for Modality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Unimodal => "unimodal",
            Self::Multimodal => "multimodal",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Formulation {
    #[default]
    Standard,
    Literal,
}

/// Parameters of the boundary penalty `u(x, a, k, m)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PenaltyParams {
    pub a: f64,
    pub k: f64,
    pub m: f64,
}

impl PenaltyParams {
    pub fn new(a: f64, k: f64, m: f64) -> Result<Self> {
        if a > 0.0 && k > 0.0 && m >= 1.0 {
            Ok(Self { a, k, m })
        } else {
            Err(Error::InvalidConfig(format!(
                "penalty needs a > 0, k > 0, m >= 1 (got a={a}, k={k}, m={m})"
            )))
        }
    }
}

const PENALTY_F11: PenaltyParams = PenaltyParams {
    a: 10.0,
    k: 100.0,
    m: 4.0,
};
const PENALTY_F12: PenaltyParams = PenaltyParams {
    a: 5.0,
    k: 100.0,
    m: 4.0,
};

/// `k(x − a)ᵐ` above `a`, `k(−x − a)ᵐ` below `−a`, zero in between.
pub fn penalty_u(xi: f64, p: PenaltyParams) -> f64 {
    if xi > p.a {
        p.k * (xi - p.a).powf(p.m)
    } else if xi < -p.a {
        p.k * (-xi - p.a).powf(p.m)
    } else {
        0.0
    }
}

/// `yᵢ = 1 + (xᵢ + 1) / 4`.
pub fn y_transform(x: &[f64]) -> Vec<f64> {
    x.iter().map(|&xi| 1.0 + (xi + 1.0) / 4.0).collect()
}

/// A test function instantiated at a fixed dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchmarkFunction {
    pub id: FunctionId,
    pub dimension: usize,
    #[serde(default)]
    pub formulation: Formulation,
}

impl BenchmarkFunction {
    pub fn new(id: FunctionId, dimension: usize) -> Result<Self> {
        Self::with_formulation(id, dimension, Formulation::Standard)
    }

    pub fn with_formulation(id: FunctionId, dimension: usize, formulation: Formulation) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidConfig("dimension must be positive".into()));
        }
        Ok(Self {
            id,
            dimension,
            formulation,
        })
    }

    pub fn name(&self) -> &'static str {
        self.id.name()
    }

    pub fn bounds(&self) -> (f64, f64) {
        self.id.bounds()
    }

    pub fn modality(&self) -> Modality {
        self.id.modality()
    }

    pub fn is_deterministic(&self) -> bool {
        self.id.is_deterministic()
    }

    /// Known minimizer, or `None` when the chosen form has no closed-form one.
    ///
    /// For f7 this is the minimizer of the noiseless part.
    pub fn optimum_location(&self) -> Option<Vec<f64>> {
        let n = self.dimension;
        let literal = self.formulation == Formulation::Literal;
        match self.id {
            FunctionId::F7 | FunctionId::F8 if literal => None,
            FunctionId::F5 | FunctionId::F12 => Some(vec![1.0; n]),
            FunctionId::F6 => Some(vec![-0.5; n]),
            FunctionId::F11 => Some(vec![-1.0; n]),
            _ => Some(vec![0.0; n]),
        }
    }

    pub fn optimum_value(&self) -> Option<f64> {
        match (self.id, self.formulation) {
            (FunctionId::F7 | FunctionId::F8, Formulation::Literal) => None,
            (FunctionId::F10, Formulation::Literal) => Some(-1.0),
            _ => Some(0.0),
        }
    }

    /// Checks `x` against the dimension and the box.
    pub fn check_feasible(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                got: x.len(),
            });
        }
        let (lower, upper) = self.bounds();
        match x.iter().position(|v| !(*v >= lower && *v <= upper)) {
            Some(index) => Err(Error::OutOfBounds {
                index,
                value: x[index],
                lower,
                upper,
            }),
            None => Ok(()),
        }
    }

    /// Objective value at `x`. Only f7 consumes `rng`, one draw per call.
    pub fn evaluate<R: RandomSource + ?Sized>(&self, x: &[f64], rng: &mut R) -> Result<f64> {
        self.check_feasible(x)?;
        let noise = if self.id == FunctionId::F7 {
            rng.uniform01()
        } else {
            0.0
        };
        Ok(self.value(x, noise))
    }

    fn value(&self, x: &[f64], noise: f64) -> f64 {
        let n = x.len() as f64;
        let literal = self.formulation == Formulation::Literal;
        match self.id {
            FunctionId::F1 => x.iter().map(|v| v * v).sum(),
            FunctionId::F2 => {
                let sum: f64 = x.iter().map(|v| v.abs()).sum();
                let prod: f64 = x.iter().map(|v| v.abs()).product();
                sum + prod
            }
            FunctionId::F3 => {
                let mut prefix = 0.0;
                let mut total = 0.0;
                for v in x {
                    prefix += v;
                    total += prefix * prefix;
                }
                total
            }
            FunctionId::F4 => x.iter().fold(0.0, |m: f64, v| m.max(v.abs())),
            FunctionId::F5 => x
                .windows(2)
                .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
                .sum(),
            FunctionId::F6 => x.iter().map(|v| (v + 0.5).abs().powi(2)).sum(),
            FunctionId::F7 => {
                let s: f64 = x
                    .iter()
                    .enumerate()
                    .map(|(i, v)| {
                        let i = (i + 1) as f64;
                        if literal {
                            i * v
                        } else {
                            i * v.powi(4)
                        }
                    })
                    .sum();
                s + noise
            }
            FunctionId::F8 => {
                let sign = if literal { 1.0 } else { -1.0 };
                x.iter()
                    .map(|v| v * v + sign * 10.0 * (2.0 * PI * v).cos() + 10.0)
                    .sum()
            }
            FunctionId::F9 => {
                let sq: f64 = x.iter().map(|v| v * v).sum();
                let cs: f64 = x.iter().map(|v| (2.0 * PI * v).cos()).sum();
                -20.0 * (-0.2 * (sq / n).sqrt()).exp() - (cs / n).exp() + 20.0 + ACKLEY_E
            }
            FunctionId::F10 => {
                let sq: f64 = x.iter().map(|v| v * v).sum();
                let prod: f64 = x
                    .iter()
                    .enumerate()
                    .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
                    .product();
                let offset = if literal { 0.0 } else { 1.0 };
                sq / 4000.0 - prod + offset
            }
            FunctionId::F11 => {
                let y = y_transform(x);
                let s1 = (PI * y[0]).sin();
                let lead = if literal { 10.0 * s1 } else { 10.0 * s1 * s1 };
                let mid: f64 = y
                    .windows(2)
                    .map(|w| (w[0] - 1.0).powi(2) * (1.0 + 10.0 * (PI * w[1]).sin().powi(2)))
                    .sum();
                let last = (y[y.len() - 1] - 1.0).powi(2);
                let pen: f64 = x.iter().map(|&v| penalty_u(v, PENALTY_F11)).sum();
                PI / n * (lead + mid + last) + pen
            }
            FunctionId::F12 => {
                let lead = (3.0 * PI * x[0]).sin().powi(2);
                let mid: f64 = if literal {
                    x.iter()
                        .map(|v| (v - 1.0).powi(2) * (1.0 + (3.0 * PI * v + 1.0).sin().powi(2)))
                        .sum()
                } else {
                    x.windows(2)
                        .map(|w| (w[0] - 1.0).powi(2) * (1.0 + (3.0 * PI * w[1]).sin().powi(2)))
                        .sum()
                };
                let xn = x[x.len() - 1];
                let last = (xn - 1.0).powi(2) * (1.0 + (2.0 * PI * xn).sin().powi(2));
                let pen: f64 = x.iter().map(|&v| penalty_u(v, PENALTY_F12)).sum();
                0.1 * (lead + mid + last) + pen
            }
            FunctionId::F13 => x.iter().map(|v| (v * v.sin() + 0.1 * v).abs()).sum(),
        }
    }
}

/// All thirteen functions at `dimension`, in id order.
pub fn list_functions(dimension: usize, formulation: Formulation) -> Result<Vec<BenchmarkFunction>> {
    FunctionId::ALL
        .iter()
        .map(|&id| BenchmarkFunction::with_formulation(id, dimension, formulation))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngStream;
    use proptest::prelude::*;

    fn eval(id: FunctionId, x: &[f64]) -> f64 {
        let f = BenchmarkFunction::new(id, x.len()).unwrap();
        f.evaluate(x, &mut RngStream::new(0)).unwrap()
    }

    #[test]
    fn pointwise_examples() {
        assert_eq!(eval(FunctionId::F1, &[0.0; 30]), 0.0);
        assert_eq!(eval(FunctionId::F5, &[1.0; 30]), 0.0);
        assert!(eval(FunctionId::F9, &[0.0; 30]).abs() < 1e-12);
        assert_eq!(eval(FunctionId::F6, &[-0.5; 30]), 0.0);
        assert!((eval(FunctionId::F13, &[1.0, 0.0]) - 0.941471).abs() < 1e-6);
        assert!((eval(FunctionId::F8, &[0.5, 0.5]) - 40.5).abs() < 1e-12);
    }

    #[test]
    fn ackley_origin_is_four_eps() {
        assert_eq!(ACKLEY_E.to_bits(), 0x4005BF0A8B14576A);
        assert_eq!(ACKLEY_E, std::f64::consts::E.next_up());
        assert_eq!(eval(FunctionId::F9, &[0.0; 30]), 4.0 * f64::EPSILON);
    }

    #[test]
    fn penalty_examples() {
        assert_eq!(penalty_u(5.0, PENALTY_F11), 0.0);
        assert_eq!(penalty_u(11.0, PENALTY_F11), 100.0);
        assert_eq!(penalty_u(-12.0, PENALTY_F11), 1600.0);
        assert_eq!(penalty_u(10.0, PENALTY_F11), 0.0);
        assert_eq!(penalty_u(-10.0, PENALTY_F11), 0.0);
        assert!(penalty_u(10.0 + 1e-9, PENALTY_F11) < 1e-30);
    }

    #[test]
    fn penalty_params_validate() {
        assert!(PenaltyParams::new(0.0, 1.0, 1.0).is_err());
        assert!(PenaltyParams::new(1.0, 0.0, 1.0).is_err());
        assert!(PenaltyParams::new(1.0, 1.0, 0.5).is_err());
        assert!(PenaltyParams::new(10.0, 100.0, 4.0).is_ok());
    }

    #[test]
    fn y_transform_examples() {
        assert_eq!(y_transform(&[-1.0; 4]), vec![1.0; 4]);
        assert_eq!(y_transform(&[3.0]), vec![2.0]);
        assert!(eval(FunctionId::F11, &[-1.0; 30]).abs() < 1e-12);
    }

    #[test]
    fn registry() {
        let all = list_functions(30, Formulation::Standard).unwrap();
        assert_eq!(all.len(), 13);
        let uni = all.iter().filter(|f| f.modality() == Modality::Unimodal).count();
        assert_eq!((uni, all.len() - uni), (7, 6));
        assert!(!all[6].is_deterministic());
        assert_eq!(all.iter().filter(|f| !f.is_deterministic()).count(), 1);
        assert_eq!(all[9].bounds(), (-600.0, 600.0));
        let ids: Vec<String> = all.iter().map(|f| f.id.to_string()).collect();
        assert_eq!(ids.first().unwrap(), "f1");
        assert_eq!(ids.last().unwrap(), "f13");
    }

    #[test]
    fn bounds_table() {
        let expect = [
            100.0, 10.0, 100.0, 100.0, 30.0, 100.0, 1.28, 5.12, 32.0, 600.0, 50.0, 50.0, 10.0,
        ];
        for (id, b) in FunctionId::ALL.iter().zip(expect) {
            assert_eq!(id.bounds(), (-b, b), "{id}");
        }
    }

    #[test]
    fn parse_ids() {
        assert_eq!("f10".parse::<FunctionId>().unwrap(), FunctionId::F10);
        assert_eq!("F3".parse::<FunctionId>().unwrap(), FunctionId::F3);
        assert!("f0".parse::<FunctionId>().is_err());
        assert!("f14".parse::<FunctionId>().is_err());
        assert!(matches!("sphere".parse::<FunctionId>(), Err(Error::UnknownFunction(_))));
    }

    #[test]
    fn evaluate_rejects_bad_input() {
        let f = BenchmarkFunction::new(FunctionId::F1, 3).unwrap();
        let mut rng = RngStream::new(0);
        assert!(matches!(
            f.evaluate(&[0.0, 0.0], &mut rng),
            Err(Error::DimensionMismatch { expected: 3, got: 2 })
        ));
        assert!(matches!(
            f.evaluate(&[0.0, 101.0, 0.0], &mut rng),
            Err(Error::OutOfBounds { index: 1, .. })
        ));
        assert!(f.evaluate(&[0.0, f64::NAN, 0.0], &mut rng).is_err());
        assert!(BenchmarkFunction::new(FunctionId::F1, 0).is_err());
    }

    #[test]
    fn only_noise_function_consumes_rng() {
        let mut rng = RngStream::new(9);
        let mut reference = RngStream::new(9);
        let f1 = BenchmarkFunction::new(FunctionId::F1, 2).unwrap();
        f1.evaluate(&[1.0, 1.0], &mut rng).unwrap();
        assert_eq!(rng.uniform01(), reference.uniform01());

        let f7 = BenchmarkFunction::new(FunctionId::F7, 2).unwrap();
        let v = f7.evaluate(&[0.0, 0.0], &mut rng).unwrap();
        assert_eq!(v, reference.uniform01());
    }

    #[test]
    fn noise_spread() {
        let f7 = BenchmarkFunction::new(FunctionId::F7, 3).unwrap();
        let x = [0.5, -1.0, 0.25];
        let s = 1.0 * 0.5f64.powi(4) + 2.0 + 3.0 * 0.25f64.powi(4);
        let mut rng = RngStream::new(77);
        let draws: Vec<f64> = (0..10_000).map(|_| f7.evaluate(&x, &mut rng).unwrap()).collect();
        assert!(draws.iter().all(|v| *v >= s && *v < s + 1.0));
        let mean = draws.iter().sum::<f64>() / draws.len() as f64;
        let var = draws.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (draws.len() - 1) as f64;
        assert!((var - 1.0 / 12.0).abs() < 0.1 / 12.0, "variance {var}");
    }

    #[test]
    fn literal_forms() {
        let mk = |id| BenchmarkFunction::with_formulation(id, 4, Formulation::Literal).unwrap();
        let mut rng = RngStream::new(0);
        assert_eq!(mk(FunctionId::F8).evaluate(&[0.0; 4], &mut rng).unwrap(), 80.0);
        assert_eq!(mk(FunctionId::F10).evaluate(&[0.0; 4], &mut rng).unwrap(), -1.0);
        assert_eq!(mk(FunctionId::F10).optimum_value(), Some(-1.0));
        assert_eq!(mk(FunctionId::F7).optimum_location(), None);
        let mut zero = crate::rng::ScriptedRng::new(vec![0.0]);
        assert_eq!(
            mk(FunctionId::F7).evaluate(&[1.0, 1.0, 0.0, -1.0], &mut zero).unwrap(),
            -1.0
        );
        // Both f11 forms agree at the minimizer up to rounding.
        assert!(mk(FunctionId::F11).evaluate(&[-1.0; 4], &mut rng).unwrap().abs() < 1e-12);
        assert!(mk(FunctionId::F12).evaluate(&[1.0; 4], &mut rng).unwrap().abs() < 1e-12);
    }

    fn point(id: FunctionId) -> impl Strategy<Value = Vec<f64>> {
        let (lo, hi) = id.bounds();
        proptest::collection::vec(lo..=hi, 1..12)
    }

    proptest! {
        #[test]
        fn even_symmetry(x in point(FunctionId::F1)) {
            let neg: Vec<f64> = x.iter().map(|v| -v).collect();
            for id in [FunctionId::F1, FunctionId::F3, FunctionId::F4] {
                prop_assert_eq!(eval(id, &x), eval(id, &neg));
            }
        }

        #[test]
        fn non_negative(seed: u64, idx in 0usize..13, n in 1usize..12) {
            let id = FunctionId::ALL[idx];
            let (lo, hi) = id.bounds();
            let mut rng = RngStream::new(seed);
            let x: Vec<f64> = (0..n).map(|_| rng.uniform_in(lo, hi)).collect();
            if id != FunctionId::F7 {
                prop_assert!(eval(id, &x) >= -1e-12);
            }
        }
    }
}
