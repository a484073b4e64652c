use super::NBodyState;
use crate::{Result, SimError};

/// Osculating elements of the satellite centre of mass about the origin body.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitalElements {
    /// Semi-major axis, m.
    pub a: f64,
    pub e: f64,
    /// Semi-latus rectum `a (1 − e²)`, m.
    pub p: f64,
    /// Specific orbital energy, J/kg.
    pub energy: f64,
    /// Specific angular momentum magnitude, m²/s.
    pub angular_momentum: f64,
}

fn relative_com(state: &NBodyState, origin: usize) -> Result<(super::Vec3, super::Vec3)> {
    let (pos, vel) = state.satellite_com();
    let o = &state.bodies[origin];
    let r = pos - o.pos;
    if r.norm_squared() == 0.0 {
        return Err(SimError::Singularity(origin, 1));
    }
    Ok((r, vel - o.vel))
}

/// `−G·M_tot/R + V²/2` for the satellite centre of mass relative to the
/// origin body, with `M_tot` the mass of all four bodies.
pub fn specific_orbital_energy(state: &NBodyState, g: f64, origin: usize) -> Result<f64> {
    let (r, v) = relative_com(state, origin)?;
    Ok(-g * state.total_mass() / r.norm() + 0.5 * v.norm_squared())
}

pub fn orbital_elements(state: &NBodyState, g: f64, origin: usize) -> Result<OrbitalElements> {
    let energy = specific_orbital_energy(state, g, origin)?;
    if !(energy < 0.0) {
        return Err(SimError::NotElliptical { energy });
    }
    let (r, v) = relative_com(state, origin)?;
    let mu = g * state.total_mass();
    let a = -mu / (2.0 * energy);
    let h = r.cross(v).norm();
    // Round-off can push the radicand slightly negative near e = 0.
    let e = (1.0 - h * h / (mu * a)).clamp(0.0, 1.0).sqrt();
    Ok(OrbitalElements {
        a,
        e,
        p: a * (1.0 - e * e),
        energy,
        angular_momentum: h,
    })
}

/// Two-body period `2π √(a³/μ)`.
pub fn kepler_period(a: f64, mu: f64) -> f64 {
    std::f64::consts::TAU * (a * a * a / mu).sqrt()
}
