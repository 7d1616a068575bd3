use crate::error::Result;
use crate::rng::RandomSource;

use super::{boundary_repair, Objective, OptimizerConfig, Particle, SwarmState};

/// Swarm plus the per-particle memory of the PSO baseline.
#[derive(Debug, Clone, PartialEq)]
pub struct PsoState {
    pub swarm: SwarmState,
    pub velocities: Vec<Vec<f64>>,
    pub personal_best: Vec<Particle>,
}

impl PsoState {
    /// Zero velocities; each particle's personal best is its start.
    pub fn new(swarm: SwarmState) -> Self {
        let n = swarm.best_position.len();
        Self {
            velocities: vec![vec![0.0; n]; swarm.particles.len()],
            personal_best: swarm.particles.clone(),
            swarm,
        }
    }
}

/// One gbest-PSO iteration:
/// `v' = w·v + c1·u1·(pbestᵢ − x) + c2·u2·(gbest − x)`, `x' = x + v'`,
/// with `u1, u2` drawn per particle and per coordinate (u1 first).
pub fn pso_step<R: RandomSource + ?Sized>(
    state: &mut PsoState,
    cfg: &OptimizerConfig,
    objective: &mut Objective<'_>,
    rng: &mut R,
) -> Result<()> {
    let params = cfg.pso;
    let PsoState {
        swarm,
        velocities,
        personal_best,
    } = state;
    for i in 0..swarm.particles.len() {
        let mut next = swarm.particles[i].position.clone();
        let velocity = &mut velocities[i];
        for d in 0..next.len() {
            let u1 = rng.uniform01();
            let u2 = rng.uniform01();
            let x = next[d];
            velocity[d] = params.inertia * velocity[d]
                + params.cognitive * u1 * (personal_best[i].position[d] - x)
                + params.social * u2 * (swarm.best_position[d] - x);
            next[d] = x + velocity[d];
        }
        boundary_repair(&mut next, cfg.lower, cfg.upper, rng);
        let fitness = objective.evaluate(&next, rng)?;
        if fitness < personal_best[i].fitness {
            personal_best[i].position.clone_from(&next);
            personal_best[i].fitness = fitness;
        }
        swarm.offer(&next, fitness);
        let particle = &mut swarm.particles[i];
        particle.position = next;
        particle.fitness = fitness;
    }
    swarm.iteration += 1;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benchmarks::{BenchmarkFunction, FunctionId};
    use crate::optimizers::{Algorithm, PsoParams};
    use crate::rng::ScriptedRng;

    fn state_at(x: f64, v: f64) -> PsoState {
        let p = Particle {
            position: vec![x],
            fitness: x * x,
        };
        let mut s = PsoState::new(SwarmState {
            particles: vec![p.clone(), p],
            best_position: vec![x],
            best_fitness: x * x,
            iteration: 0,
            weight: None,
        });
        s.velocities = vec![vec![v]; 2];
        s
    }

    fn cfg(params: PsoParams) -> (BenchmarkFunction, OptimizerConfig) {
        let f = BenchmarkFunction::new(FunctionId::F1, 1).unwrap();
        let mut c = OptimizerConfig::for_function(Algorithm::Pso, &f);
        c.particles = 2;
        c.pso = params;
        (f, c)
    }

    #[test]
    fn inertia_only_moves_by_velocity() {
        let (f, c) = cfg(PsoParams {
            inertia: 1.0,
            cognitive: 0.0,
            social: 0.0,
        });
        let mut s = state_at(10.0, 2.5);
        let mut obj = Objective::new(&f);
        pso_step(&mut s, &c, &mut obj, &mut ScriptedRng::new(vec![0.3, 0.6])).unwrap();
        assert_eq!(s.velocities, vec![vec![2.5]; 2]);
        assert!(s.swarm.particles.iter().all(|p| p.position == vec![12.5]));
    }

    #[test]
    fn attractors_at_position_leave_damped_velocity() {
        let (f, c) = cfg(PsoParams::default());
        let mut s = state_at(-3.0, 4.0);
        let mut obj = Objective::new(&f);
        pso_step(&mut s, &c, &mut obj, &mut ScriptedRng::new(vec![0.9, 0.1])).unwrap();
        assert_eq!(s.velocities[0], vec![0.7298 * 4.0]);
    }

    #[test]
    fn personal_best_only_improves() {
        let (f, c) = cfg(PsoParams {
            inertia: 1.0,
            cognitive: 0.0,
            social: 0.0,
        });
        let mut s = state_at(1.0, 5.0);
        let mut obj = Objective::new(&f);
        pso_step(&mut s, &c, &mut obj, &mut ScriptedRng::new(vec![0.5])).unwrap();
        assert_eq!(s.personal_best[0].position, vec![1.0]);
        assert_eq!(s.swarm.best_fitness, 1.0);
        assert_eq!(s.swarm.particles[0].fitness, 36.0);
    }
}
