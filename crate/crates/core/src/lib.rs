//! Deterministic simulation engines.
//!
//! Four families live here:
//!
//! - [`nbody`]: a planet and a three-lump spring satellite under Newtonian
//!   gravity and damped spring forces, integrated with step-doubling RK4.
//!   Tidal flexing of the satellite dissipates orbital energy and the orbit
//!   circularises while the semi-latus rectum stays nearly fixed.
//! - [`cellular`]: elementary (Wolfram-numbered) automata and Conway's Life.
//! - [`agents`]: Schelling segregation on a checkerboard and on a line.
//! - [`numerics`]: Euler and RK4 steppers, an adaptive driver, a seeded
//!   generator and a Monte Carlo estimator.
//!
//! Every engine is a pure function of its inputs (plus an explicit seed where
//! randomness is involved), so repeated runs are bit-identical.

pub mod agents;
pub mod cellular;
mod error;
pub mod nbody;
pub mod numerics;

pub use error::{Result, SimError};
