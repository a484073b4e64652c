//! A planet and a satellite made of three spring-connected lumps, under
//! Newtonian gravity and damped spring forces.
//!
//! Because the orbit is eccentric the satellite is stretched periodically by
//! the tidal field. The damping term turns part of that flexing into heat, so
//! orbital energy decays while angular momentum is (nearly) kept: the semi-
//! major axis and eccentricity shrink and `a (1 − e²)` stays put.

mod diagnostics;
mod elements;
mod engine;
mod forces;
mod model;
mod vector;

pub use diagnostics::{OrbitAverage, OrbitAverager};
pub use elements::{kepler_period, orbital_elements, specific_orbital_energy, OrbitalElements};
pub use engine::{
    accelerations, initial_state, run, run_observed, step, total_energy, RunRecord, Sample, MAX_SAMPLES,
};
pub use forces::{gravitational_accelerations, spring_forces, spring_potential};
pub use model::{Body, NBodyConfig, NBodyState, SatelliteModel, SpringConfig, BODY_COUNT, G_REFERENCE};
pub use vector::Vec3;
