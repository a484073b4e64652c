use super::Prng;
use crate::{Result, SimError};

/// Monte Carlo estimate of an integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    /// Sample standard deviation (n − 1 denominator) divided by √n.
    pub std_error: f64,
    pub n: usize,
}

/// Estimate `∫ₐᵇ f(x) dx` as `(b − a)` times the mean of `f` at `n` uniform
/// points drawn from a generator seeded with `seed`.
///
/// Concurrent estimates that must be independent need distinct seeds.
pub fn monte_carlo_mean<F>(f: F, a: f64, b: f64, n: usize, seed: u64) -> Result<McEstimate>
where
    F: Fn(f64) -> f64,
{
    if n < 2 {
        return Err(SimError::domain(format!("need at least 2 samples, got {n}")));
    }
    if !(b > a) || !a.is_finite() || !b.is_finite() {
        return Err(SimError::domain(format!("need finite a < b, got [{a}, {b}]")));
    }
    let width = b - a;
    let mut rng = Prng::new(seed);
    // Welford accumulation of the scaled samples.
    let mut mean = 0.0;
    let mut m2 = 0.0;
    for i in 0..n {
        let x = a + width * rng.next_f64();
        let fx = f(x);
        if !fx.is_finite() {
            return Err(SimError::NonFinite(format!("f({x}) = {fx}")));
        }
        let v = width * fx;
        let delta = v - mean;
        mean += delta / (i + 1) as f64;
        m2 += delta * (v - mean);
    }
    let variance = m2 / (n - 1) as f64;
    Ok(McEstimate {
        mean,
        std_error: (variance / n as f64).sqrt(),
        n,
    })
}
