use super::forces::{add_pair_gravity, spring_forces, spring_potential, SPRING_PAIRS};
use super::{orbital_elements, Body, NBodyConfig, NBodyState, SatelliteModel, Vec3, BODY_COUNT};
use crate::numerics::{OdeSystem, StepController};
use crate::Result;

/// Storage bound on recorded samples.
pub const MAX_SAMPLES: usize = 1000;

const DIM: usize = BODY_COUNT * 6;

/// Accelerations of all four bodies under gravity and, for the triangle
/// model, the spring forces. In the point model the lumps do not interact.
pub fn accelerations(bodies: &[Body; BODY_COUNT], config: &NBodyConfig) -> Result<[Vec3; BODY_COUNT]> {
    let mut acc = [Vec3::ZERO; BODY_COUNT];
    for i in 0..BODY_COUNT {
        for j in i + 1..BODY_COUNT {
            if i > 0 && config.satellite == SatelliteModel::Point {
                continue;
            }
            add_pair_gravity(bodies, config.g, i, j, &mut acc)?;
        }
    }
    if config.satellite == SatelliteModel::Triangle {
        let lumps = [bodies[1], bodies[2], bodies[3]];
        let f = spring_forces(&lumps, &config.spring)?;
        for (k, force) in f.iter().enumerate() {
            acc[k + 1] += *force / lumps[k].mass;
        }
    }
    Ok(acc)
}

/// Kinetic plus gravitational plus spring energy, J.
pub fn total_energy(state: &NBodyState, config: &NBodyConfig) -> f64 {
    let b = &state.bodies;
    let mut potential = 0.0;
    for i in 0..BODY_COUNT {
        for j in i + 1..BODY_COUNT {
            if i > 0 && config.satellite == SatelliteModel::Point {
                continue;
            }
            potential -= config.g * b[i].mass * b[j].mass / (b[j].pos - b[i].pos).norm();
        }
    }
    if config.satellite == SatelliteModel::Triangle {
        potential += spring_potential(&state.lumps(), &config.spring);
    }
    state.kinetic_energy() + potential
}

/// Planet at rest at the origin; satellite centre of mass at apocentre on
/// +x moving along +y with `√(G·M_tot·(1 − e0)/d0)`. The lumps sit on an
/// equilateral triangle of side `l0` in the xy-plane (one vertex pointing
/// away from the planet) and spin rigidly at the orbital angular velocity.
pub fn initial_state(config: &NBodyConfig) -> Result<NBodyState> {
    config.validate()?;
    let mu = config.g * config.total_mass();
    let vv = (mu * (1.0 - config.e0) / config.d0).sqrt();
    let com = Vec3::new(config.d0, 0.0, 0.0);
    let com_vel = Vec3::new(0.0, vv, 0.0);
    let spin = Vec3::new(0.0, 0.0, vv / config.d0);

    let planet = Body::new(config.planet_mass, Vec3::ZERO, Vec3::ZERO)?;
    let mut bodies = [planet; BODY_COUNT];
    let circumradius = match config.satellite {
        SatelliteModel::Triangle => config.spring.l0 / 3f64.sqrt(),
        SatelliteModel::Point => 0.0,
    };
    for (k, slot) in bodies[1..].iter_mut().enumerate() {
        let angle = k as f64 * std::f64::consts::TAU / 3.0;
        let offset = Vec3::new(angle.cos(), angle.sin(), 0.0) * circumradius;
        *slot = Body::new(config.lump_mass(), com + offset, com_vel + spin.cross(offset))?;
    }
    Ok(NBodyState {
        t: 0.0,
        bodies,
        dt: config.dt0,
    })
}

struct Dynamics<'a> {
    config: &'a NBodyConfig,
    masses: [f64; BODY_COUNT],
}

impl Dynamics<'_> {
    fn unpack(&self, y: &[f64]) -> [Body; BODY_COUNT] {
        std::array::from_fn(|i| {
            let s = &y[6 * i..6 * i + 6];
            Body {
                mass: self.masses[i],
                pos: Vec3::new(s[0], s[1], s[2]),
                vel: Vec3::new(s[3], s[4], s[5]),
            }
        })
    }
}

impl OdeSystem for Dynamics<'_> {
    fn dimension(&self) -> usize {
        DIM
    }

    fn rhs(&self, _t: f64, y: &[f64], dydt: &mut [f64]) -> Result<()> {
        let bodies = self.unpack(y);
        let acc = accelerations(&bodies, self.config)?;
        for (i, (b, a)) in bodies.iter().zip(&acc).enumerate() {
            dydt[6 * i..6 * i + 6].copy_from_slice(&[b.vel.x, b.vel.y, b.vel.z, a.x, a.y, a.z]);
        }
        Ok(())
    }
}

fn pack(bodies: &[Body; BODY_COUNT]) -> Vec<f64> {
    bodies
        .iter()
        .flat_map(|b| [b.pos.x, b.pos.y, b.pos.z, b.vel.x, b.vel.y, b.vel.z])
        .collect()
}

/// Largest position discrepancy over the four bodies, m.
fn positional_error(a: &[f64], b: &[f64]) -> f64 {
    (0..BODY_COUNT)
        .map(|i| {
            let d = Vec3::new(a[6 * i] - b[6 * i], a[6 * i + 1] - b[6 * i + 1], a[6 * i + 2] - b[6 * i + 2]);
            d.norm()
        })
        .fold(0.0, f64::max)
}

fn controller(config: &NBodyConfig) -> StepController {
    StepController {
        tolerance: config.tolerance,
        dt_min: 1e-6 * config.dt0,
        dt_max: 16.0 * config.dt0,
    }
}

fn step_until(state: &NBodyState, config: &NBodyConfig, t_end: f64) -> Result<NBodyState> {
    let dynamics = Dynamics {
        config,
        masses: state.bodies.map(|b| b.mass),
    };
    let y = pack(&state.bodies);
    let acc = controller(config).advance(&dynamics, state.t, &y, state.dt, t_end, positional_error)?;
    let t = if acc.dt_used >= t_end - state.t { t_end } else { state.t + acc.dt_used };
    Ok(NBodyState {
        t,
        bodies: dynamics.unpack(&acc.y),
        dt: acc.dt_next,
    })
}

/// Advance one accepted adaptive RK4 step.
///
/// A full step is compared with two half steps; while their largest
/// positional discrepancy exceeds `tolerance` the step is halved. The
/// two-half-step solution is kept. The next step is then resized from the
/// measured error (at most doubling), capped at `16·dt0`. Steps below
/// `1e-6·dt0` fail.
pub fn step(state: &NBodyState, config: &NBodyConfig) -> Result<NBodyState> {
    state.check_lumps_equal()?;
    step_until(state, config, f64::INFINITY)
}

/// One recorded diagnostic row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub t: f64,
    pub a: f64,
    pub e: f64,
    /// Specific orbital energy, J/kg.
    pub energy: f64,
    /// Specific angular momentum, m²/s.
    pub angular_momentum: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub samples: Vec<Sample>,
    pub config_echo: NBodyConfig,
    pub steps: usize,
    pub final_state: NBodyState,
}

fn sample(state: &NBodyState, config: &NBodyConfig) -> Result<Sample> {
    let el = orbital_elements(state, config.g, config.origin_body)?;
    Ok(Sample {
        t: state.t,
        a: el.a,
        e: el.e,
        energy: el.energy,
        angular_momentum: el.angular_momentum,
    })
}

/// Integrate from t = 0 to `t_total`, recording the orbital elements at
/// t = 0 and after every `record_every` accepted steps. Recording stops
/// once [`MAX_SAMPLES`] rows are stored; integration continues.
pub fn run(config: &NBodyConfig) -> Result<RunRecord> {
    run_observed(config, |_| {})
}

/// [`run`], calling `observe` with the initial state and after every
/// accepted step.
pub fn run_observed<F>(config: &NBodyConfig, mut observe: F) -> Result<RunRecord>
where
    F: FnMut(&NBodyState),
{
    let mut state = initial_state(config)?;
    observe(&state);
    let mut samples = vec![sample(&state, config)?];
    let mut steps = 0usize;
    while state.t < config.t_total {
        state = step_until(&state, config, config.t_total).map_err(|e| e.at(state.t))?;
        steps += 1;
        observe(&state);
        if steps % config.record_every == 0 && samples.len() < MAX_SAMPLES {
            samples.push(sample(&state, config).map_err(|e| e.at(state.t))?);
        }
    }
    Ok(RunRecord {
        samples,
        config_echo: *config,
        steps,
        final_state: state,
    })
}

impl NBodyState {
    /// Pairwise distances between the lumps, in spring order.
    pub fn lump_separations(&self) -> [f64; 3] {
        SPRING_PAIRS.map(|(i, j)| (self.bodies[j + 1].pos - self.bodies[i + 1].pos).norm())
    }
}
