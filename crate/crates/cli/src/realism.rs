//! Advisory checks that flag runs describing a physically impossible
//! target system. They never reject a run.

use std::fmt;

use trisim_core::nbody::G_REFERENCE;

use crate::config::{NBodyRun, RunConfig};

const G_RELATIVE_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct Warning {
    pub key: &'static str,
    pub given: f64,
    pub reference: f64,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Empirical,
    Imaginary,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Empirical => "empirical",
            Classification::Imaginary => "imaginary",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RealismReport {
    pub warnings: Vec<Warning>,
}

impl RealismReport {
    pub fn classification(&self) -> Classification {
        if self.warnings.is_empty() {
            Classification::Empirical
        } else {
            Classification::Imaginary
        }
    }

    /// Guard a whole run file; only n-body runs have anything to check.
    pub fn for_config(config: &RunConfig) -> Self {
        match config {
            RunConfig::NBody(run) => realism_guard(run),
            _ => RealismReport::default(),
        }
    }
}

impl fmt::Display for RealismReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in &self.warnings {
            writeln!(f, "warning: {}: {} (given {:e}, reference {:e})", w.key, w.message, w.given, w.reference)?;
        }
        write!(f, "classification: {}", self.classification())
    }
}

pub fn realism_guard(run: &NBodyRun) -> RealismReport {
    let c = &run.sim;
    let mut warnings = Vec::new();
    if ((c.g - G_REFERENCE) / G_REFERENCE).abs() > G_RELATIVE_TOLERANCE {
        warnings.push(Warning {
            key: "G",
            given: c.g,
            reference: G_REFERENCE,
            message: format!("gravitational constant differs from {G_REFERENCE:e} m^3 kg^-1 s^-2"),
        });
    }
    if c.satellite_mass > c.planet_mass {
        warnings.push(Warning {
            key: "satellite_mass",
            given: c.satellite_mass,
            reference: c.planet_mass,
            message: "satellite is heavier than the planet".into(),
        });
    }
    for (key, mass) in [("planet_mass", c.planet_mass), ("satellite_mass", c.satellite_mass)] {
        if let Some(lo) = run.mass_min.filter(|&lo| mass < lo) {
            warnings.push(Warning { key, given: mass, reference: lo, message: "below mass_min".into() });
        }
        if let Some(hi) = run.mass_max.filter(|&hi| mass > hi) {
            warnings.push(Warning { key, given: mass, reference: hi, message: "above mass_max".into() });
        }
    }
    RealismReport { warnings }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_config;

    fn guard(text: &str) -> RealismReport {
        RealismReport::for_config(&parse_config(text).unwrap().config)
    }

    #[test]
    fn defaults_are_empirical() {
        let r = guard("kind = nbody\n");
        assert!(r.warnings.is_empty());
        assert_eq!(r.classification(), Classification::Empirical);
    }

    #[test]
    fn unit_gravity_is_imaginary() {
        let r = guard("kind = nbody\nG = 2\n");
        assert_eq!(r.warnings.len(), 1);
        assert_eq!((r.warnings[0].key, r.warnings[0].reference), ("G", 6.67384e-11));
        assert_eq!(r.classification(), Classification::Imaginary);
        assert!(r.to_string().ends_with("classification: imaginary"));
    }

    #[test]
    fn tiny_g_perturbation_passes() {
        assert!(guard("kind = nbody\nG = 6.673840001e-11\n").warnings.is_empty());
        assert_eq!(guard("kind = nbody\nG = 6.6739e-11\n").warnings.len(), 1);
    }

    #[test]
    fn heavy_satellite() {
        let r = guard("kind = nbody\nsatellite_mass = 3e30\n");
        assert_eq!(r.warnings.len(), 1);
        assert_eq!(r.warnings[0].key, "satellite_mass");
    }

    #[test]
    fn mass_bounds() {
        let r = guard("kind = nbody\nmass_min = 1e23\nmass_max = 1e27\n");
        let keys: Vec<_> = r.warnings.iter().map(|w| (w.key, w.message.as_str())).collect();
        assert_eq!(keys, [("planet_mass", "above mass_max"), ("satellite_mass", "below mass_min")]);
        assert!(guard("kind = nbody\nmass_min = 1e20\nmass_max = 1e28\n").warnings.is_empty());
    }

    #[test]
    fn other_kinds_have_nothing_to_check() {
        assert_eq!(guard("kind = eca\n").classification(), Classification::Empirical);
    }
}
