use super::Vec3;
use crate::{Result, SimError};

/// Reference value of the gravitational constant, m³ kg⁻¹ s⁻².
pub const G_REFERENCE: f64 = 6.673_84e-11;

pub const BODY_COUNT: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Body {
    /// kg
    pub mass: f64,
    /// m
    pub pos: Vec3,
    /// m/s
    pub vel: Vec3,
}

impl Body {
    pub fn new(mass: f64, pos: Vec3, vel: Vec3) -> Result<Self> {
        if !(mass > 0.0) || !mass.is_finite() {
            return Err(SimError::config(format!("body mass must be positive, got {mass}")));
        }
        Ok(Body { mass, pos, vel })
    }
}

/// Spring joining each pair of satellite lumps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpringConfig {
    /// Spring constant, N/m.
    pub k: f64,
    /// Unstressed length, m.
    pub l0: f64,
    /// Damping coefficient, N·s/m.
    pub c: f64,
}

impl SpringConfig {
    pub const DEFAULT_K: f64 = 2e18;
    pub const DEFAULT_C: f64 = 2e20;

    pub fn validate(&self) -> Result<()> {
        if !(self.k > 0.0 && self.k.is_finite()) {
            return Err(SimError::config(format!("spring constant k must be positive, got {}", self.k)));
        }
        if !(self.l0 > 0.0 && self.l0.is_finite()) {
            return Err(SimError::config(format!("spring length l0 must be positive, got {}", self.l0)));
        }
        if !(self.c >= 0.0 && self.c.is_finite()) {
            return Err(SimError::config(format!("damping c must be non-negative, got {}", self.c)));
        }
        Ok(())
    }
}

impl Default for SpringConfig {
    fn default() -> Self {
        SpringConfig {
            k: Self::DEFAULT_K,
            l0: 1e6,
            c: Self::DEFAULT_C,
        }
    }
}

/// How the satellite is represented.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SatelliteModel {
    /// Three lumps on an equilateral triangle joined by damped springs.
    #[default]
    Triangle,
    /// All three lumps coincide and move as one point mass: no springs and
    /// no lump-lump gravity. Reduces the system to the two-body problem.
    Point,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NBodyConfig {
    /// Gravitational constant, m³ kg⁻¹ s⁻².
    pub g: f64,
    pub planet_mass: f64,
    /// Total satellite mass; each lump carries a third.
    pub satellite_mass: f64,
    /// Initial time step, s.
    pub dt0: f64,
    pub t_total: f64,
    /// Index of the body diagnostics are measured from.
    pub origin_body: usize,
    /// Positional error bound per step, m.
    pub tolerance: f64,
    /// Initial orbital distance (apocentre), m.
    pub d0: f64,
    pub spring: SpringConfig,
    pub e0: f64,
    pub record_every: usize,
    pub satellite: SatelliteModel,
    /// Unused by the deterministic engine; kept for config symmetry.
    pub seed: u64,
}

impl Default for NBodyConfig {
    fn default() -> Self {
        NBodyConfig {
            g: G_REFERENCE,
            planet_mass: 2e27,
            satellite_mass: 3e22,
            dt0: 10.0,
            t_total: 125_000.0,
            origin_body: 0,
            tolerance: 100.0,
            d0: 1e8,
            spring: SpringConfig::default(),
            e0: 0.6,
            record_every: 100,
            satellite: SatelliteModel::Triangle,
            seed: 0,
        }
    }
}

impl NBodyConfig {
    /// Sum of all four masses.
    pub fn total_mass(&self) -> f64 {
        self.planet_mass + self.satellite_mass
    }

    pub fn lump_mass(&self) -> f64 {
        self.satellite_mass / 3.0
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("G", self.g),
            ("planet_mass", self.planet_mass),
            ("satellite_mass", self.satellite_mass),
            ("dt0", self.dt0),
            ("tolerance", self.tolerance),
            ("d0", self.d0),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(SimError::config(format!("{name} must be positive, got {v}")));
            }
        }
        if !(self.t_total >= 0.0 && self.t_total.is_finite()) {
            return Err(SimError::config(format!("t_total must be non-negative, got {}", self.t_total)));
        }
        if !(0.0..1.0).contains(&self.e0) {
            return Err(SimError::config(format!("e0 must lie in [0, 1), got {}", self.e0)));
        }
        if self.record_every == 0 {
            return Err(SimError::config("record_every must be at least 1"));
        }
        if self.origin_body >= BODY_COUNT {
            return Err(SimError::config(format!(
                "origin_body must be below {BODY_COUNT}, got {}",
                self.origin_body
            )));
        }
        if self.satellite == SatelliteModel::Triangle {
            self.spring.validate()?;
            if self.spring.l0 >= self.d0 {
                return Err(SimError::config(format!(
                    "satellite larger than its orbit: l0 = {} >= d0 = {}",
                    self.spring.l0, self.d0
                )));
            }
        }
        Ok(())
    }
}

/// Planet (index 0) and the three satellite lumps (1..=3).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NBodyState {
    pub t: f64,
    pub bodies: [Body; BODY_COUNT],
    /// Current adaptive step, s.
    pub dt: f64,
}

impl NBodyState {
    pub fn planet(&self) -> &Body {
        &self.bodies[0]
    }

    pub fn lumps(&self) -> [Body; 3] {
        [self.bodies[1], self.bodies[2], self.bodies[3]]
    }

    pub fn satellite_mass(&self) -> f64 {
        self.bodies[1..].iter().map(|b| b.mass).sum()
    }

    pub fn total_mass(&self) -> f64 {
        self.bodies.iter().map(|b| b.mass).sum()
    }

    /// Satellite centre of mass position and velocity.
    pub fn satellite_com(&self) -> (Vec3, Vec3) {
        let m = self.satellite_mass();
        let pos = self.bodies[1..].iter().map(|b| b.pos * b.mass).sum::<Vec3>() / m;
        let vel = self.bodies[1..].iter().map(|b| b.vel * b.mass).sum::<Vec3>() / m;
        (pos, vel)
    }

    pub fn momentum(&self) -> Vec3 {
        self.bodies.iter().map(|b| b.vel * b.mass).sum()
    }

    /// Whole-system centre of mass position and velocity.
    pub fn system_com(&self) -> (Vec3, Vec3) {
        let m = self.total_mass();
        let pos = self.bodies.iter().map(|b| b.pos * b.mass).sum::<Vec3>() / m;
        (pos, self.momentum() / m)
    }

    /// Total angular momentum about the system centre of mass.
    pub fn angular_momentum(&self) -> Vec3 {
        let (r0, v0) = self.system_com();
        self.bodies
            .iter()
            .map(|b| (b.pos - r0).cross(b.vel - v0) * b.mass)
            .sum()
    }

    pub fn kinetic_energy(&self) -> f64 {
        self.bodies.iter().map(|b| 0.5 * b.mass * b.vel.norm_squared()).sum()
    }

    pub(crate) fn check_lumps_equal(&self) -> Result<()> {
        let m = self.bodies[1].mass;
        for b in &self.bodies[2..] {
            if ((b.mass - m) / m).abs() > 1e-12 {
                return Err(SimError::config("satellite lump masses differ"));
            }
        }
        Ok(())
    }
}
