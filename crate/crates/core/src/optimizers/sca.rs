use crate::error::Result;
use crate::rng::RandomSource;

use super::{boundary_repair, CoefficientSampling, Objective, OptimizerConfig, SineCosineDraws, SwarmState};

/// One iteration of the sine-cosine algorithm:
/// `x' = x + r1·trig(r2)·|r3·best − x|`.
pub fn sca_step<R: RandomSource + ?Sized>(
    state: &mut SwarmState,
    cfg: &OptimizerConfig,
    objective: &mut Objective<'_>,
    rng: &mut R,
) -> Result<()> {
    for i in 0..state.particles.len() {
        let p = &state.particles[i].position;
        let best = &state.best_position;
        let mut next: Vec<f64> = match cfg.sine_cosine.sampling {
            CoefficientSampling::PerParticle => {
                let d = SineCosineDraws::draw(&cfg.sine_cosine, rng);
                let step = d.oscillation();
                p.iter()
                    .zip(best)
                    .map(|(x, b)| x + step * (d.r3 * b - x).abs())
                    .collect()
            }
            CoefficientSampling::PerCoordinate => p
                .iter()
                .zip(best)
                .map(|(x, b)| {
                    let d = SineCosineDraws::draw(&cfg.sine_cosine, rng);
                    x + d.oscillation() * (d.r3 * b - x).abs()
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
    Ok(())
}
