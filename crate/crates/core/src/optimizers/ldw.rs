use crate::error::Result;
use crate::rng::RandomSource;

use super::{boundary_repair, CoefficientSampling, Objective, OptimizerConfig, SineCosineDraws, SwarmState};

/// `vᵢ = w·r1·trig(r2)·|r3·bestᵢ − pᵢ|` with `trig = sin` when `r4 < 0.5`,
/// `cos` otherwise.
pub fn ldw_velocity(p: &[f64], best: &[f64], w: f64, draws: &SineCosineDraws) -> Vec<f64> {
    let scale = w * draws.oscillation();
    p.iter()
        .zip(best)
        .map(|(pi, bi)| scale * (draws.r3 * bi - pi).abs())
        .collect()
}

/// `p' = p·w + v + r4·best·w`, elementwise.
pub fn ldw_position_update(p: &[f64], v: &[f64], w: f64, r4: f64, best: &[f64]) -> Vec<f64> {
    p.iter()
        .zip(v)
        .zip(best)
        .map(|((pi, vi), bi)| pi * w + vi + r4 * bi * w)
        .collect()
}

/// One LDW-SCSA iteration with weight `w` shared by every particle.
pub fn ldw_step<R: RandomSource + ?Sized>(
    state: &mut SwarmState,
    w: f64,
    cfg: &OptimizerConfig,
    objective: &mut Objective<'_>,
    rng: &mut R,
) -> Result<()> {
    for i in 0..state.particles.len() {
        let p = &state.particles[i].position;
        let best = &state.best_position;
        let mut next = match cfg.sine_cosine.sampling {
            CoefficientSampling::PerParticle => {
                let draws = SineCosineDraws::draw(&cfg.sine_cosine, rng);
                let v = ldw_velocity(p, best, w, &draws);
                ldw_position_update(p, &v, w, draws.r4, best)
            }
            CoefficientSampling::PerCoordinate => p
                .iter()
                .zip(best)
                .map(|(pi, bi)| {
                    let d = SineCosineDraws::draw(&cfg.sine_cosine, rng);
                    let v = w * d.oscillation() * (d.r3 * bi - pi).abs();
                    pi * w + v + d.r4 * bi * w
                })
                .collect(),
        };
        boundary_repair(&mut next, cfg.lower, cfg.upper, rng);
        let fitness = objective.evaluate(&next, rng)?;
        state.offer(&next, fitness);
        let particle = &mut state.particles[i];
        particle.position = next;
        particle.fitness = fitness;
    }
    state.iteration += 1;
    state.weight = Some(w);
    Ok(())
}
