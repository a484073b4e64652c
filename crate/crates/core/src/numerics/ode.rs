use crate::{Result, SimError};

/// A first-order system `y' = f(t, y)`.
pub trait OdeSystem {
    fn dimension(&self) -> usize;

    /// Write `f(t, y)` into `dydt`. Both slices have length [`dimension`].
    ///
    /// [`dimension`]: OdeSystem::dimension
    fn rhs(&self, t: f64, y: &[f64], dydt: &mut [f64]) -> Result<()>;
}

/// Adapts a closure into an [`OdeSystem`].
pub struct FnSystem<F> {
    dimension: usize,
    f: F,
}

impl<F> FnSystem<F>
where
    F: Fn(f64, &[f64], &mut [f64]),
{
    pub fn new(dimension: usize, f: F) -> Self {
        FnSystem { dimension, f }
    }
}

impl<F> OdeSystem for FnSystem<F>
where
    F: Fn(f64, &[f64], &mut [f64]),
{
    fn dimension(&self) -> usize {
        self.dimension
    }

    fn rhs(&self, t: f64, y: &[f64], dydt: &mut [f64]) -> Result<()> {
        (self.f)(t, y, dydt);
        Ok(())
    }
}

fn eval<S: OdeSystem + ?Sized>(sys: &S, t: f64, y: &[f64], out: &mut [f64]) -> Result<()> {
    sys.rhs(t, y, out)?;
    if let Some(i) = out.iter().position(|v| !v.is_finite()) {
        return Err(SimError::NonFinite(format!(
            "derivative component {i} is {} at t = {t}",
            out[i]
        )));
    }
    Ok(())
}

fn check_step(y: &[f64], dim: usize, dt: f64) -> Result<()> {
    if y.len() != dim {
        return Err(SimError::domain(format!(
            "state has {} components, system expects {dim}",
            y.len()
        )));
    }
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(SimError::domain(format!("step size must be positive, got {dt}")));
    }
    Ok(())
}

/// Explicit Euler: `y + dt·f(t, y)`.
pub fn euler_step<S: OdeSystem + ?Sized>(sys: &S, t: f64, y: &[f64], dt: f64) -> Result<Vec<f64>> {
    check_step(y, sys.dimension(), dt)?;
    let mut k = vec![0.0; y.len()];
    eval(sys, t, y, &mut k)?;
    Ok(y.iter().zip(&k).map(|(yi, ki)| yi + dt * ki).collect())
}

/// Classic four-stage Runge-Kutta step.
pub fn rk4_step<S: OdeSystem + ?Sized>(sys: &S, t: f64, y: &[f64], dt: f64) -> Result<Vec<f64>> {
    check_step(y, sys.dimension(), dt)?;
    let n = y.len();
    let mut k1 = vec![0.0; n];
    let mut k2 = vec![0.0; n];
    let mut k3 = vec![0.0; n];
    let mut k4 = vec![0.0; n];
    let mut tmp = vec![0.0; n];
    let half = 0.5 * dt;

    eval(sys, t, y, &mut k1)?;
    for i in 0..n {
        tmp[i] = y[i] + half * k1[i];
    }
    eval(sys, t + half, &tmp, &mut k2)?;
    for i in 0..n {
        tmp[i] = y[i] + half * k2[i];
    }
    eval(sys, t + half, &tmp, &mut k3)?;
    for i in 0..n {
        tmp[i] = y[i] + dt * k3[i];
    }
    eval(sys, t + dt, &tmp, &mut k4)?;

    let sixth = dt / 6.0;
    Ok((0..n)
        .map(|i| y[i] + sixth * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
        .collect())
}

/// Result of comparing one full RK4 step against two half steps.
#[derive(Debug, Clone)]
pub struct DoublingStep {
    /// The two-half-step solution (the more accurate of the pair).
    pub y: Vec<f64>,
    /// Discrepancy between the two solutions under the caller's norm.
    pub error: f64,
}

/// One step-doubling trial of size `dt`. `norm` measures the discrepancy
/// between the full-step and two-half-step solutions.
pub fn rk4_doubling_step<S, N>(sys: &S, t: f64, y: &[f64], dt: f64, norm: N) -> Result<DoublingStep>
where
    S: OdeSystem + ?Sized,
    N: Fn(&[f64], &[f64]) -> f64,
{
    let full = rk4_step(sys, t, y, dt)?;
    let half = 0.5 * dt;
    let mid = rk4_step(sys, t, y, half)?;
    let two = rk4_step(sys, t + half, &mid, half)?;
    let error = norm(&full, &two);
    Ok(DoublingStep { y: two, error })
}

/// Largest absolute componentwise difference.
pub fn max_abs_difference(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Step-size policy shared by [`adaptive_integrate`] and the N-body engine.
///
/// A trial step is accepted when its doubling error is within `tolerance`;
/// otherwise the step is halved and retried. After an accepted step the next
/// step is rescaled by `0.9 (tolerance / error)^(1/5)`, growing at most
/// twofold per step and never beyond `dt_max`. Falling below `dt_min` is a
/// stiffness failure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepController {
    pub tolerance: f64,
    pub dt_min: f64,
    pub dt_max: f64,
}

/// Outcome of [`StepController::advance`].
#[derive(Debug, Clone)]
pub struct Accepted {
    pub y: Vec<f64>,
    /// Step actually taken.
    pub dt_used: f64,
    /// Suggested size for the next step.
    pub dt_next: f64,
    pub error: f64,
}

impl StepController {
    const SAFETY: f64 = 0.9;
    const MAX_GROWTH: f64 = 2.0;

    fn growth(&self, error: f64) -> f64 {
        if error == 0.0 {
            return Self::MAX_GROWTH;
        }
        (Self::SAFETY * (self.tolerance / error).powf(0.2)).min(Self::MAX_GROWTH)
    }

    /// Take one accepted step of at most `dt` (and never past `t_end`).
    pub fn advance<S, N>(&self, sys: &S, t: f64, y: &[f64], dt: f64, t_end: f64, norm: N) -> Result<Accepted>
    where
        S: OdeSystem + ?Sized,
        N: Fn(&[f64], &[f64]) -> f64,
    {
        let mut dt = dt.min(self.dt_max);
        loop {
            if dt < self.dt_min {
                return Err(SimError::Stiffness { t, dt });
            }
            let remaining = t_end - t;
            let clipped = remaining < dt;
            let trial = if clipped { remaining } else { dt };
            let step = rk4_doubling_step(sys, t, y, trial, &norm)?;
            if step.error <= self.tolerance {
                // A step clipped at t_end says nothing about the natural size.
                let dt_next = if clipped {
                    dt
                } else {
                    (trial * self.growth(step.error)).min(self.dt_max)
                };
                return Ok(Accepted {
                    y: step.y,
                    dt_used: trial,
                    dt_next,
                    error: step.error,
                });
            }
            dt = 0.5 * trial;
        }
    }
}

/// Integrate from `t0` to `t1` with step doubling under the max-abs norm.
/// Returns the final state and the number of accepted steps.
pub fn adaptive_integrate<S: OdeSystem + ?Sized>(
    sys: &S,
    t0: f64,
    y0: &[f64],
    t1: f64,
    tol: f64,
) -> Result<(Vec<f64>, usize)> {
    if !(t1 > t0) {
        return Err(SimError::domain(format!("t1 ({t1}) must exceed t0 ({t0})")));
    }
    if !(tol > 0.0) {
        return Err(SimError::domain(format!("tolerance must be positive, got {tol}")));
    }
    let span = t1 - t0;
    let controller = StepController {
        tolerance: tol,
        dt_min: span * 1e-12,
        dt_max: span,
    };
    let mut t = t0;
    let mut y = y0.to_vec();
    let mut dt = span;
    let mut steps = 0;
    while t < t1 {
        let acc = controller.advance(sys, t, &y, dt, t1, max_abs_difference)?;
        t = if acc.dt_used >= t1 - t { t1 } else { t + acc.dt_used };
        y = acc.y;
        dt = acc.dt_next;
        steps += 1;
    }
    Ok((y, steps))
}
