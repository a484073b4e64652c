use super::{Body, SpringConfig, Vec3};
use crate::{Result, SimError};

/// Newtonian acceleration of every body due to all the others.
///
/// Pairs are visited once and both sides are updated from the same pair
/// vector, so momentum balance holds pair by pair.
pub fn gravitational_accelerations(bodies: &[Body], g: f64) -> Result<Vec<Vec3>> {
    let mut acc = vec![Vec3::ZERO; bodies.len()];
    for i in 0..bodies.len() {
        for j in i + 1..bodies.len() {
            add_pair_gravity(bodies, g, i, j, &mut acc)?;
        }
    }
    Ok(acc)
}

pub(crate) fn add_pair_gravity(bodies: &[Body], g: f64, i: usize, j: usize, acc: &mut [Vec3]) -> Result<()> {
    let d = bodies[j].pos - bodies[i].pos;
    let r2 = d.norm_squared();
    if r2 == 0.0 {
        return Err(SimError::Singularity(i, j));
    }
    let inv_r3 = 1.0 / (r2 * r2.sqrt());
    let s = d * (g * inv_r3);
    acc[i] += s * bodies[j].mass;
    acc[j] -= s * bodies[i].mass;
    Ok(())
}

/// Spring pairs in order S₁S₂, S₂S₃, S₃S₁.
pub const SPRING_PAIRS: [(usize, usize); 3] = [(0, 1), (1, 2), (2, 0)];

/// Damped spring forces (newtons) on the three satellite lumps.
///
/// Each spring of current length `l` pulls its two ends towards each other
/// with magnitude `k (l − l0) + c dl/dt`, where `dl/dt` is the relative
/// velocity projected on the spring axis. A negative value pushes the ends
/// apart. The damping term always opposes the change in length.
pub fn spring_forces(lumps: &[Body; 3], spring: &SpringConfig) -> Result<[Vec3; 3]> {
    let mut f = [Vec3::ZERO; 3];
    for (i, j) in SPRING_PAIRS {
        let d = lumps[j].pos - lumps[i].pos;
        let len = d.norm();
        if len == 0.0 {
            return Err(SimError::Singularity(i + 1, j + 1));
        }
        let axis = d / len;
        let rate = (lumps[j].vel - lumps[i].vel).dot(axis);
        let inward = spring.k * (len - spring.l0) + spring.c * rate;
        f[i] += axis * inward;
        f[j] -= axis * inward;
    }
    Ok(f)
}

/// Elastic energy stored in the three springs, J.
pub fn spring_potential(lumps: &[Body; 3], spring: &SpringConfig) -> f64 {
    SPRING_PAIRS
        .iter()
        .map(|&(i, j)| {
            let stretch = (lumps[j].pos - lumps[i].pos).norm() - spring.l0;
            0.5 * spring.k * stretch * stretch
        })
        .sum()
}
