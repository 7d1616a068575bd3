//! Independent reference implementations used by the oracle and acceptance
//! tests. They are deliberately written as flat loops over plain vectors,
//! sharing nothing with the library except the objective functions (which
//! have their own per-term oracle below) and the [`RandomSource`] trait that
//! lets f7 take its noise draw.

#![allow(dead_code, clippy::needless_range_loop)]

use std::f64::consts::PI;

use ldw_scsa::benchmarks::{BenchmarkFunction, FunctionId};
use ldw_scsa::rng::RandomSource;

/// Replays a fixed list of uniforms, cycling.
pub struct Tape {
    values: Vec<f64>,
    pub pos: usize,
    pub repairs: usize,
}

impl Tape {
    pub fn new(values: Vec<f64>) -> Self {
        Self {
            values,
            pos: 0,
            repairs: 0,
        }
    }

    pub fn next(&mut self) -> f64 {
        let v = self.values[self.pos % self.values.len()];
        self.pos += 1;
        v
    }

    pub fn range(&mut self, a: f64, b: f64) -> f64 {
        a + (b - a) * self.next()
    }
}

impl RandomSource for Tape {
    fn uniform01(&mut self) -> f64 {
        self.next()
    }
}

/// Deterministic pseudo-random uniforms in (0, 1) for building scripts.
pub fn script(len: usize, salt: u64) -> Vec<f64> {
    let mut s = salt.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1;
    (0..len)
        .map(|_| {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((s >> 11) as f64 + 0.5) / (1u64 << 53) as f64
        })
        .collect()
}

pub struct Transcript {
    pub best: f64,
    pub best_position: Vec<f64>,
    pub trace: Vec<f64>,
    pub evaluations: usize,
}

fn clamp01(w: f64) -> f64 {
    let eps = f64::EPSILON;
    if w >= 1.0 {
        1.0 - eps
    } else if w <= 0.0 || w.is_nan() {
        eps
    } else {
        w
    }
}

struct Swarm {
    x: Vec<Vec<f64>>,
    fit: Vec<f64>,
    best: Vec<f64>,
    best_fit: f64,
    evaluations: usize,
}

fn eval(f: &BenchmarkFunction, x: &[f64], tape: &mut Tape, evaluations: &mut usize) -> f64 {
    *evaluations += 1;
    let v = f.evaluate(x, tape).expect("in-bounds point");
    if v.is_nan() {
        f64::INFINITY
    } else {
        v
    }
}

fn start(f: &BenchmarkFunction, pn: usize, tape: &mut Tape) -> Swarm {
    let (lb, ub) = f.bounds();
    let n = f.dimension;
    let mut x = vec![vec![0.0; n]; pn];
    for i in 0..pn {
        for j in 0..n {
            x[i][j] = tape.range(lb, ub);
        }
    }
    let mut evaluations = 0;
    let mut fit = vec![0.0; pn];
    for i in 0..pn {
        fit[i] = eval(f, &x[i], tape, &mut evaluations);
    }
    let mut b = 0;
    for i in 1..pn {
        if fit[i] < fit[b] {
            b = i;
        }
    }
    Swarm {
        best: x[b].clone(),
        best_fit: fit[b],
        x,
        fit,
        evaluations,
    }
}

fn repair(x: &mut [f64], lb: f64, ub: f64, tape: &mut Tape) {
    for j in 0..x.len() {
        if !(x[j] >= lb && x[j] <= ub) {
            x[j] = tape.range(lb, ub);
            tape.repairs += 1;
        }
    }
}

fn accept(s: &mut Swarm, i: usize, next: Vec<f64>, f: &BenchmarkFunction, tape: &mut Tape) {
    let fx = eval(f, &next, tape, &mut s.evaluations);
    if fx < s.best_fit {
        s.best_fit = fx;
        s.best = next.clone();
    }
    s.x[i] = next;
    s.fit[i] = fx;
}

/// LDW-SCSA: initial weight from the best position, one weight per
/// iteration, four scalars per particle.
pub fn naive_ldw(f: &BenchmarkFunction, pn: usize, mi: usize, eps_init: bool, tape: &mut Tape) -> Transcript {
    let (lb, ub) = f.bounds();
    let n = f.dimension;
    let mut s = start(f, pn, tape);
    let mut trace = vec![s.best_fit];

    let mut w = if eps_init {
        f64::EPSILON
    } else {
        let mut sq = 0.0;
        for j in 0..n {
            sq += s.best[j] * s.best[j];
        }
        clamp01(sq.sqrt() / ((ub - lb) * (n as f64).sqrt()))
    };

    for _t in 0..mi {
        for i in 0..pn {
            let r1 = tape.range(-2.0, 2.0);
            let r2 = tape.range(-2.0, 2.0);
            let r3 = tape.range(-2.0, 2.0);
            let r4 = tape.next();
            let trig = if r4 < 0.5 { r2.sin() } else { r2.cos() };
            let mut next = vec![0.0; n];
            for j in 0..n {
                let v = w * (r1 * trig) * (r3 * s.best[j] - s.x[i][j]).abs();
                next[j] = s.x[i][j] * w + v + r4 * s.best[j] * w;
            }
            repair(&mut next, lb, ub, tape);
            accept(&mut s, i, next, f, tape);
        }
        trace.push(s.best_fit);
        w = clamp01(4.0 * w * (1.0 - w));
    }
    Transcript {
        best: s.best_fit,
        best_position: s.best,
        trace,
        evaluations: s.evaluations,
    }
}

/// Sine-cosine baseline: r1 ∈ [0,2], r2 ∈ [0,2π], r3 ∈ [0,2], r4 ∈ [0,1),
/// fresh for every coordinate.
pub fn naive_sca(f: &BenchmarkFunction, pn: usize, mi: usize, tape: &mut Tape) -> Transcript {
    let (lb, ub) = f.bounds();
    let n = f.dimension;
    let mut s = start(f, pn, tape);
    let mut trace = vec![s.best_fit];
    for _t in 0..mi {
        for i in 0..pn {
            let mut next = vec![0.0; n];
            for j in 0..n {
                let r1 = tape.range(0.0, 2.0);
                let r2 = tape.range(0.0, 2.0 * PI);
                let r3 = tape.range(0.0, 2.0);
                let r4 = tape.next();
                let trig = if r4 < 0.5 { r2.sin() } else { r2.cos() };
                next[j] = s.x[i][j] + (r1 * trig) * (r3 * s.best[j] - s.x[i][j]).abs();
            }
            repair(&mut next, lb, ub, tape);
            accept(&mut s, i, next, f, tape);
        }
        trace.push(s.best_fit);
    }
    Transcript {
        best: s.best_fit,
        best_position: s.best,
        trace,
        evaluations: s.evaluations,
    }
}

/// Global-best PSO with inertia `w` and acceleration `c1`, `c2`.
pub fn naive_pso(
    f: &BenchmarkFunction,
    pn: usize,
    mi: usize,
    (w, c1, c2): (f64, f64, f64),
    tape: &mut Tape,
) -> Transcript {
    let (lb, ub) = f.bounds();
    let n = f.dimension;
    let mut s = start(f, pn, tape);
    let mut vel = vec![vec![0.0; n]; pn];
    let mut pbest = s.x.clone();
    let mut pbest_fit = s.fit.clone();
    let mut trace = vec![s.best_fit];
    for _t in 0..mi {
        for i in 0..pn {
            let mut next = s.x[i].clone();
            for j in 0..n {
                let u1 = tape.next();
                let u2 = tape.next();
                vel[i][j] = w * vel[i][j] + c1 * u1 * (pbest[i][j] - next[j]) + c2 * u2 * (s.best[j] - next[j]);
                next[j] += vel[i][j];
            }
            repair(&mut next, lb, ub, tape);
            let before = s.evaluations;
            accept(&mut s, i, next, f, tape);
            debug_assert_eq!(s.evaluations, before + 1);
            if s.fit[i] < pbest_fit[i] {
                pbest_fit[i] = s.fit[i];
                pbest[i] = s.x[i].clone();
            }
        }
        trace.push(s.best_fit);
    }
    Transcript {
        best: s.best_fit,
        best_position: s.best,
        trace,
        evaluations: s.evaluations,
    }
}

fn u_pen(x: f64, a: f64, k: f64, m: i32) -> f64 {
    if x > a {
        k * (x - a).powi(m)
    } else if x < -a {
        k * (-x - a).powi(m)
    } else {
        0.0
    }
}

/// Term-by-term evaluation of the standard forms, with f7's noise supplied.
pub fn oracle_value(id: FunctionId, x: &[f64], noise: f64) -> f64 {
    let n = x.len();
    let nf = n as f64;
    let mut total = 0.0;
    match id {
        FunctionId::F1 => {
            for xi in x {
                total += xi * xi;
            }
        }
        FunctionId::F2 => {
            let mut prod = 1.0;
            for xi in x {
                total += xi.abs();
                prod *= xi.abs();
            }
            total += prod;
        }
        FunctionId::F3 => {
            for i in 0..n {
                let mut inner = 0.0;
                for xj in &x[..=i] {
                    inner += xj;
                }
                total += inner * inner;
            }
        }
        FunctionId::F4 => {
            for xi in x {
                if xi.abs() > total {
                    total = xi.abs();
                }
            }
        }
        FunctionId::F5 => {
            for i in 0..n - 1 {
                let a = x[i + 1] - x[i] * x[i];
                let b = x[i] - 1.0;
                total += 100.0 * a * a + b * b;
            }
        }
        FunctionId::F6 => {
            for xi in x {
                let t = xi + 0.5;
                total += t * t;
            }
        }
        FunctionId::F7 => {
            for (i, xi) in x.iter().enumerate() {
                total += (i + 1) as f64 * xi * xi * xi * xi;
            }
            total += noise;
        }
        FunctionId::F8 => {
            for xi in x {
                total += xi * xi - 10.0 * (2.0 * PI * xi).cos() + 10.0;
            }
        }
        FunctionId::F9 => {
            let mut sq = 0.0;
            let mut cs = 0.0;
            for xi in x {
                sq += xi * xi;
                cs += (2.0 * PI * xi).cos();
            }
            total = -20.0 * (-0.2 * (sq / nf).sqrt()).exp() - (cs / nf).exp() + 20.0 + std::f64::consts::E;
        }
        FunctionId::F10 => {
            let mut sq = 0.0;
            let mut prod = 1.0;
            for (i, xi) in x.iter().enumerate() {
                sq += xi * xi;
                prod *= (xi / ((i + 1) as f64).sqrt()).cos();
            }
            total = sq / 4000.0 - prod + 1.0;
        }
        FunctionId::F11 => {
            let y: Vec<f64> = x.iter().map(|xi| 1.0 + (xi + 1.0) / 4.0).collect();
            let mut inner = 10.0 * (PI * y[0]).sin() * (PI * y[0]).sin();
            for i in 0..n - 1 {
                let s = (PI * y[i + 1]).sin();
                inner += (y[i] - 1.0) * (y[i] - 1.0) * (1.0 + 10.0 * s * s);
            }
            inner += (y[n - 1] - 1.0) * (y[n - 1] - 1.0);
            total = PI / nf * inner;
            for xi in x {
                total += u_pen(*xi, 10.0, 100.0, 4);
            }
        }
        FunctionId::F12 => {
            let mut inner = (3.0 * PI * x[0]).sin().powi(2);
            for i in 0..n - 1 {
                inner += (x[i] - 1.0).powi(2) * (1.0 + (3.0 * PI * x[i + 1]).sin().powi(2));
            }
            inner += (x[n - 1] - 1.0).powi(2) * (1.0 + (2.0 * PI * x[n - 1]).sin().powi(2));
            total = 0.1 * inner;
            for xi in x {
                total += u_pen(*xi, 5.0, 100.0, 4);
            }
        }
        FunctionId::F13 => {
            for xi in x {
                total += (xi * xi.sin() + 0.1 * xi).abs();
            }
        }
    }
    total
}

/// `|a − b| ≤ rel · max(|a|, |b|)`, with exact equality accepted.
pub fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    a == b || (a - b).abs() <= rel * a.abs().max(b.abs())
}
