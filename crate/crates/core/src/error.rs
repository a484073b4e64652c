use thiserror::Error;

pub type Result<T, E = SimError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimError {
    /// Two bodies (or satellite lumps) occupy the same point.
    #[error("singularity: bodies {0} and {1} coincide")]
    Singularity(usize, usize),

    #[error("orbit not elliptical (specific energy {energy} J/kg)")]
    NotElliptical { energy: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    /// The adaptive controller could not meet its tolerance.
    #[error("step size underflow at t = {t} (dt = {dt})")]
    Stiffness { t: f64, dt: f64 },

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("at t = {t}: {source}")]
    AtTime { t: f64, source: Box<SimError> },
}

impl SimError {
    pub(crate) fn config(msg: impl Into<String>) -> Self {
        SimError::Config(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        SimError::Domain(msg.into())
    }

    /// Attach a simulation time, unless the error already carries one.
    pub(crate) fn at(self, t: f64) -> Self {
        match self {
            e @ (SimError::Stiffness { .. } | SimError::AtTime { .. }) => e,
            e => SimError::AtTime { t, source: Box::new(e) },
        }
    }
}
