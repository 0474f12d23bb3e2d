//! Registry of the classical 23 benchmark functions (F1-F23) with their
//! conventional bounds, default dimensions, and known optima.
//!
//! F1-F13 are scalable (default 30 dimensions); F14-F23 have fixed small
//! dimensions. All are minimization problems. Known minima are verified by
//! evaluation at the stored minimizers and by sampling oracles in the tests,
//! never trusted blindly.

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::rng::RandomSource;
use crate::space::SearchSpace;
use serde::{Deserialize, Serialize};
use std::f64::consts::{E, PI};
use std::fmt;
use std::str::FromStr;

/// Stable label for one benchmark function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[allow(clippy::upper_case_acronyms)]
pub enum BenchmarkId {
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
    F14,
    F15,
    F16,
    F17,
    F18,
    F19,
    F20,
    F21,
    F22,
    F23,
}

use BenchmarkId::*;

impl BenchmarkId {
    pub const ALL: [BenchmarkId; 23] = [
        F1, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11, F12, F13, F14, F15, F16, F17, F18, F19, F20,
        F21, F22, F23,
    ];

    pub fn name(self) -> &'static str {
        match self {
            F1 => "sphere",
            F2 => "schwefel-2.22",
            F3 => "schwefel-1.2",
            F4 => "schwefel-2.21",
            F5 => "rosenbrock",
            F6 => "step",
            F7 => "quartic-noise",
            F8 => "schwefel-2.26",
            F9 => "rastrigin",
            F10 => "ackley",
            F11 => "griewank",
            F12 => "penalized-1",
            F13 => "penalized-2",
            F14 => "shekel-foxholes",
            F15 => "kowalik",
            F16 => "six-hump-camel",
            F17 => "branin",
            F18 => "goldstein-price",
            F19 => "hartmann-3",
            F20 => "hartmann-6",
            F21 => "shekel-5",
            F22 => "shekel-7",
            F23 => "shekel-10",
        }
    }

    /// True for F1-F13, which accept any dimension >= 1.
    pub fn is_scalable(self) -> bool {
        (self as usize) < (F14 as usize)
    }

    pub fn dim_default(self) -> usize {
        match self {
            F14 | F16 | F17 | F18 => 2,
            F19 => 3,
            F15 | F21 | F22 | F23 => 4,
            F20 => 6,
            _ => 30,
        }
    }

    /// Uniform scalar bounds replicated per dimension.
    pub fn bounds(self) -> (f64, f64) {
        match self {
            F1 | F3 | F4 | F6 => (-100.0, 100.0),
            F2 => (-10.0, 10.0),
            F5 => (-30.0, 30.0),
            F7 => (-1.28, 1.28),
            F8 => (-500.0, 500.0),
            F9 => (-5.12, 5.12),
            F10 => (-32.0, 32.0),
            F11 => (-600.0, 600.0),
            F12 | F13 => (-50.0, 50.0),
            F14 => (-65.536, 65.536),
            F15 | F16 => (-5.0, 5.0),
            F17 => (-5.0, 15.0),
            F18 => (-2.0, 2.0),
            F19 | F20 => (0.0, 1.0),
            F21 | F22 | F23 => (0.0, 10.0),
        }
    }

    /// Resolves a requested dimension against the function's contract.
    pub fn resolve_dim(self, requested: Option<usize>) -> Result<usize> {
        match requested {
            None => Ok(self.dim_default()),
            Some(d) if self.is_scalable() && d >= 1 => Ok(d),
            Some(d) if d == self.dim_default() => Ok(d),
            Some(d) => Err(Error::InvalidConfig(format!(
                "{self} requires dimension {} (got {d})",
                self.dim_default()
            ))),
        }
    }

    pub fn space(self, dim: Option<usize>) -> Result<SearchSpace> {
        let d = self.resolve_dim(dim)?;
        let (lb, ub) = self.bounds();
        SearchSpace::uniform(d, lb, ub)
    }

    /// Literature optimum at the given dimension. For F7 this is the
    /// noiseless floor.
    pub fn known_min(self, dim: usize) -> f64 {
        match self {
            F8 => SCHWEFEL_226_PER_DIM_MIN * dim as f64,
            F14 => 0.9980038377944498,
            F15 => 3.074859878056051e-4,
            F16 => -1.0316284534898776,
            F17 => 0.39788735772973816,
            F18 => 3.0,
            F19 => -3.862782147820756,
            F20 => -3.322368011415515,
            F21 => -10.153199679058229,
            F22 => -10.402940566818662,
            F23 => -10.536409816692045,
            _ => 0.0,
        }
    }

    /// Known minimizer, when one is available in closed or tabulated form.
    pub fn known_argmin(self, dim: usize) -> Option<Vec<f64>> {
        match self {
            F1 | F2 | F3 | F4 | F6 | F7 | F9 | F10 | F11 => Some(vec![0.0; dim]),
            F5 | F13 => Some(vec![1.0; dim]),
            F8 => Some(vec![SCHWEFEL_226_ARGMIN; dim]),
            F12 => Some(vec![-1.0; dim]),
            F14 => Some(vec![-31.97833337797648, -31.978334007870856]),
            F15 => Some(vec![
                0.19283345304274813,
                0.19083624027597035,
                0.12311729907598003,
                0.13576599033984466,
            ]),
            F16 => Some(vec![0.08984201652927098, -0.7126564013807202]),
            F17 => Some(vec![PI, 2.275]),
            F18 => Some(vec![0.0, -1.0]),
            F19 => Some(vec![
                0.11461434203083393,
                0.5556488507905368,
                0.852546953846026,
            ]),
            F20 => Some(vec![
                0.20168951037794658,
                0.15001069146456325,
                0.4768739733706766,
                0.2753324288543796,
                0.3116516165632252,
                0.6573005308464771,
            ]),
            F21 => Some(vec![
                4.000037152376549,
                4.000133278657566,
                4.000037151057555,
                4.000133277090425,
            ]),
            F22 => Some(vec![
                4.000572914277084,
                4.000689366040889,
                3.9994897107938447,
                3.9996061600067923,
            ]),
            F23 => Some(vec![
                4.000746530253313,
                4.000592936779709,
                3.9996633957714787,
                3.9995097993299975,
            ]),
        }
    }

    /// Evaluates the function at `x`.
    ///
    /// Deterministic except F7, which adds one uniform draw from `rng` to
    /// each evaluation. Panics on a dimension mismatch.
    pub fn evaluate(self, x: &[f64], rng: &mut dyn RandomSource) -> f64 {
        if self.is_scalable() {
            assert!(!x.is_empty(), "{self} requires at least 1 dimension");
        } else {
            assert_eq!(
                x.len(),
                self.dim_default(),
                "{self} requires dimension {}",
                self.dim_default()
            );
        }
        match self {
            F1 => sphere(x),
            F2 => schwefel_222(x),
            F3 => schwefel_12(x),
            F4 => schwefel_221(x),
            F5 => rosenbrock(x),
            F6 => step(x),
            F7 => quartic(x) + rng.uniform(),
            F8 => schwefel_226(x),
            F9 => rastrigin(x),
            F10 => ackley(x),
            F11 => griewank(x),
            F12 => penalized_1(x),
            F13 => penalized_2(x),
            F14 => shekel_foxholes(x),
            F15 => kowalik(x),
            F16 => six_hump_camel(x),
            F17 => branin(x),
            F18 => goldstein_price(x),
            F19 => hartmann_3(x),
            F20 => hartmann_6(x),
            F21 => shekel(x, 5),
            F22 => shekel(x, 7),
            F23 => shekel(x, 10),
        }
    }
}

impl Objective for BenchmarkId {
    fn evaluate(&self, x: &[f64], rng: &mut dyn RandomSource) -> f64 {
        BenchmarkId::evaluate(*self, x, rng)
    }
}

impl fmt::Display for BenchmarkId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", *self as usize + 1)
    }
}

impl FromStr for BenchmarkId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let normalized = s.trim().to_ascii_uppercase();
        BenchmarkId::ALL
            .iter()
            .copied()
            .find(|id| id.to_string() == normalized)
            .ok_or_else(|| Error::UnknownBenchmark(s.to_string()))
    }
}

/// Metadata for one function at a concrete dimension.
#[derive(Clone, Debug, Serialize)]
pub struct BenchmarkSpec {
    pub id: BenchmarkId,
    pub name: &'static str,
    pub dim_default: usize,
    pub lb: f64,
    pub ub: f64,
    pub known_min: f64,
    pub known_argmin: Option<Vec<f64>>,
}

/// All 23 specs in stable F1..F23 order, resolved at default dimensions.
pub fn registry() -> Vec<BenchmarkSpec> {
    BenchmarkId::ALL
        .iter()
        .map(|&id| {
            let dim = id.dim_default();
            let (lb, ub) = id.bounds();
            BenchmarkSpec {
                id,
                name: id.name(),
                dim_default: dim,
                lb,
                ub,
                known_min: id.known_min(dim),
                known_argmin: id.known_argmin(dim),
            }
        })
        .collect()
}

// --- function definitions ---

const SCHWEFEL_226_ARGMIN: f64 = 420.96874878568275;
const SCHWEFEL_226_PER_DIM_MIN: f64 = -418.98288727243295;

fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

fn schwefel_222(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v.abs()).sum();
    let prod: f64 = x.iter().map(|v| v.abs()).product();
    sum + prod
}

fn schwefel_12(x: &[f64]) -> f64 {
    let mut prefix = 0.0;
    let mut total = 0.0;
    for &v in x {
        prefix += v;
        total += prefix * prefix;
    }
    total
}

fn schwefel_221(x: &[f64]) -> f64 {
    x.iter().map(|v| v.abs()).fold(0.0, f64::max)
}

fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

fn step(x: &[f64]) -> f64 {
    x.iter().map(|v| (v + 0.5).floor().powi(2)).sum()
}

/// Noiseless part of F7; the uniform noise term is added at evaluation.
fn quartic(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v.powi(4))
        .sum()
}

fn schwefel_226(x: &[f64]) -> f64 {
    -x.iter().map(|v| v * v.abs().sqrt().sin()).sum::<f64>()
}

fn rastrigin(x: &[f64]) -> f64 {
    x.iter()
        .map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
        .sum()
}

fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sum_sq: f64 = x.iter().map(|v| v * v).sum();
    let sum_cos: f64 = x.iter().map(|v| (2.0 * PI * v).cos()).sum();
    -20.0 * (-0.2 * (sum_sq / n).sqrt()).exp() - (sum_cos / n).exp() + 20.0 + E
}

fn griewank(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let prod: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    sum - prod + 1.0
}

/// Boundary penalty shared by the two penalized functions.
fn penalty(x: &[f64], a: f64, k: f64, m: i32) -> f64 {
    x.iter()
        .map(|&v| {
            if v > a {
                k * (v - a).powi(m)
            } else if v < -a {
                k * (-v - a).powi(m)
            } else {
                0.0
            }
        })
        .sum()
}

fn penalized_1(x: &[f64]) -> f64 {
    let n = x.len();
    let y = |v: f64| 1.0 + (v + 1.0) / 4.0;
    let mut core = 10.0 * (PI * y(x[0])).sin().powi(2);
    for i in 0..n - 1 {
        let yi = y(x[i]);
        core += (yi - 1.0).powi(2) * (1.0 + 10.0 * (PI * y(x[i + 1])).sin().powi(2));
    }
    core += (y(x[n - 1]) - 1.0).powi(2);
    PI / n as f64 * core + penalty(x, 10.0, 100.0, 4)
}

fn penalized_2(x: &[f64]) -> f64 {
    let n = x.len();
    let mut core = (3.0 * PI * x[0]).sin().powi(2);
    for i in 0..n - 1 {
        core += (x[i] - 1.0).powi(2) * (1.0 + (3.0 * PI * x[i + 1]).sin().powi(2));
    }
    core += (x[n - 1] - 1.0).powi(2) * (1.0 + (2.0 * PI * x[n - 1]).sin().powi(2));
    0.1 * core + penalty(x, 5.0, 100.0, 4)
}

fn shekel_foxholes(x: &[f64]) -> f64 {
    const OFFSETS: [f64; 5] = [-32.0, -16.0, 0.0, 16.0, 32.0];
    let mut sum = 0.0;
    for j in 0..25 {
        let a0 = OFFSETS[j % 5];
        let a1 = OFFSETS[j / 5];
        sum += 1.0 / ((j + 1) as f64 + (x[0] - a0).powi(6) + (x[1] - a1).powi(6));
    }
    1.0 / (1.0 / 500.0 + sum)
}

fn kowalik(x: &[f64]) -> f64 {
    const A: [f64; 11] = [
        0.1957, 0.1947, 0.1735, 0.16, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246,
    ];
    const B_INV: [f64; 11] = [0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0];
    A.iter()
        .zip(B_INV)
        .map(|(&a, b_inv)| {
            let b = 1.0 / b_inv;
            let r = a - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
            r * r
        })
        .sum()
}

fn six_hump_camel(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    4.0 * x1.powi(2) - 2.1 * x1.powi(4) + x1.powi(6) / 3.0 + x1 * x2 - 4.0 * x2.powi(2)
        + 4.0 * x2.powi(4)
}

fn branin(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    (x2 - 5.1 * x1 * x1 / (4.0 * PI * PI) + 5.0 * x1 / PI - 6.0).powi(2)
        + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * x1.cos()
        + 10.0
}

fn goldstein_price(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    let t1 = 1.0
        + (x1 + x2 + 1.0).powi(2)
            * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 * x2);
    let t2 = 30.0
        + (2.0 * x1 - 3.0 * x2).powi(2)
            * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2 * x2);
    t1 * t2
}

const HARTMANN_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];

fn hartmann_3(x: &[f64]) -> f64 {
    const A: [[f64; 3]; 4] = [
        [3.0, 10.0, 30.0],
        [0.1, 10.0, 35.0],
        [3.0, 10.0, 30.0],
        [0.1, 10.0, 35.0],
    ];
    const P: [[f64; 3]; 4] = [
        [0.3689, 0.117, 0.2673],
        [0.4699, 0.4387, 0.747],
        [0.1091, 0.8732, 0.5547],
        [0.03815, 0.5743, 0.8828],
    ];
    -(0..4)
        .map(|i| {
            let inner: f64 = (0..3).map(|j| A[i][j] * (x[j] - P[i][j]).powi(2)).sum();
            HARTMANN_C[i] * (-inner).exp()
        })
        .sum::<f64>()
}

fn hartmann_6(x: &[f64]) -> f64 {
    const A: [[f64; 6]; 4] = [
        [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
        [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
        [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
        [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
    ];
    const P: [[f64; 6]; 4] = [
        [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
        [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
        [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.665],
        [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
    ];
    -(0..4)
        .map(|i| {
            let inner: f64 = (0..6).map(|j| A[i][j] * (x[j] - P[i][j]).powi(2)).sum();
            HARTMANN_C[i] * (-inner).exp()
        })
        .sum::<f64>()
}

fn shekel(x: &[f64], m: usize) -> f64 {
    const A: [[f64; 4]; 10] = [
        [4.0, 4.0, 4.0, 4.0],
        [1.0, 1.0, 1.0, 1.0],
        [8.0, 8.0, 8.0, 8.0],
        [6.0, 6.0, 6.0, 6.0],
        [3.0, 7.0, 3.0, 7.0],
        [2.0, 9.0, 2.0, 9.0],
        [5.0, 5.0, 3.0, 3.0],
        [8.0, 1.0, 8.0, 1.0],
        [6.0, 2.0, 6.0, 2.0],
        [7.0, 3.6, 7.0, 3.6],
    ];
    const C: [f64; 10] = [0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];
    -(0..m)
        .map(|j| {
            let dist: f64 = (0..4).map(|i| (x[i] - A[j][i]).powi(2)).sum();
            1.0 / (dist + C[j])
        })
        .sum::<f64>()
}
