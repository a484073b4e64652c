use super::{orbital_elements, NBodyConfig, NBodyState};
use crate::Result;

/// Time-averaged orbital elements over one revolution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitAverage {
    pub t_start: f64,
    pub t_end: f64,
    pub mean_e: f64,
    pub mean_p: f64,
}

/// Splits a trajectory into revolutions at apocentre passages (radial
/// velocity turning from outward to inward) and averages `e` and `p` over
/// each complete revolution with trapezoidal time weights.
///
/// Feed it every accepted state, e.g. from `run_observed`.
#[derive(Debug, Clone)]
pub struct OrbitAverager {
    g: f64,
    origin: usize,
    prev: Option<Point>,
    open: Option<Accum>,
    orbits: Vec<OrbitAverage>,
}

#[derive(Debug, Clone, Copy)]
struct Point {
    t: f64,
    e: f64,
    p: f64,
    radial: f64,
}

#[derive(Debug, Clone, Copy)]
struct Accum {
    t_start: f64,
    e_area: f64,
    p_area: f64,
}

impl OrbitAverager {
    pub fn new(config: &NBodyConfig) -> Self {
        OrbitAverager {
            g: config.g,
            origin: config.origin_body,
            prev: None,
            open: None,
            orbits: Vec::new(),
        }
    }

    pub fn observe(&mut self, state: &NBodyState) -> Result<()> {
        let el = orbital_elements(state, self.g, self.origin)?;
        let (pos, vel) = state.satellite_com();
        let o = &state.bodies[self.origin];
        let radial = (pos - o.pos).dot(vel - o.vel);
        let cur = Point { t: state.t, e: el.e, p: el.p, radial };
        if let Some(prev) = self.prev {
            let dt = cur.t - prev.t;
            if let Some(acc) = self.open.as_mut() {
                acc.e_area += 0.5 * dt * (prev.e + cur.e);
                acc.p_area += 0.5 * dt * (prev.p + cur.p);
            }
            if prev.radial > 0.0 && cur.radial <= 0.0 {
                if let Some(acc) = self.open.take() {
                    let span = cur.t - acc.t_start;
                    self.orbits.push(OrbitAverage {
                        t_start: acc.t_start,
                        t_end: cur.t,
                        mean_e: acc.e_area / span,
                        mean_p: acc.p_area / span,
                    });
                }
                self.open = Some(Accum { t_start: cur.t, e_area: 0.0, p_area: 0.0 });
            }
        } else if cur.radial <= 0.0 {
            // Starting at (or just past) apocentre counts as a passage.
            self.open = Some(Accum { t_start: cur.t, e_area: 0.0, p_area: 0.0 });
        }
        self.prev = Some(cur);
        Ok(())
    }

    /// Completed revolutions, in time order.
    pub fn orbits(&self) -> &[OrbitAverage] {
        &self.orbits
    }
}
