//! Numerical kernels: deterministic ODE steppers, a step-doubling adaptive
//! driver, a seeded pseudo-random generator and a Monte Carlo estimator.
//!
//! Closed-form ("exact") solutions appear only as test oracles. Everything is
//! computed in `f64`; results are exact only up to the 53-bit word size.

mod monte_carlo;
mod ode;
mod prng;

pub use monte_carlo::{monte_carlo_mean, McEstimate};
pub use ode::{
    adaptive_integrate, euler_step, max_abs_difference, rk4_doubling_step, rk4_step,
    Accepted, DoublingStep, FnSystem, OdeSystem, StepController,
};
pub use prng::Prng;
