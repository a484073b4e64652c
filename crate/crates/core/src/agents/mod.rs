//! Schelling segregation: agents of two kinds relocate when too few of their
//! occupied neighbours share their kind.
//!
//! The 2-D model uses a checkerboard with vacancies and 3x3 (Moore)
//! neighbourhoods; the 1-D model uses a fully packed line of 70 agents that
//! look four places either side. Updates are sequential in a seeded random
//! order, so a run is a pure function of its configuration and seed.

mod board;
mod line;
mod schelling;

pub use board::{Board, Cell, Census, Kind};
pub use line::{run_line, run_schelling_1d, Line, LINE_POPULATION, LINE_RADIUS};
pub use schelling::{contentment, init_board, run_board, run_schelling, sweep, MoveRule, SchellingConfig};

use crate::{Result, SimError};

/// Measurements taken after each sweep (sweep 0 is the initial state).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRecord {
    pub sweep: usize,
    pub discontent: usize,
    /// `None` when no agent has an occupied neighbour.
    pub segregation_index: Option<f64>,
    pub moved: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SegregationTrace<S> {
    pub sweeps: Vec<SweepRecord>,
    pub final_state: S,
    /// True iff nobody is discontent at the last recorded sweep.
    pub converged: bool,
}

/// Populations whose agents can report the share of like neighbours.
pub trait Neighbourhoods {
    /// Like fraction among occupied neighbours, for every agent that has at
    /// least one occupied neighbour.
    fn like_fractions(&self) -> Vec<f64>;
}

/// Mean like-neighbour fraction over agents with at least one occupied
/// neighbour: 1 for complete separation, about 0.5 for a random mix.
pub fn segregation_index<N: Neighbourhoods + ?Sized>(population: &N) -> Result<f64> {
    let fractions = population.like_fractions();
    if fractions.is_empty() {
        return Err(SimError::domain("no agent has an occupied neighbour"));
    }
    Ok(fractions.iter().sum::<f64>() / fractions.len() as f64)
}

fn is_content(like: usize, unlike: usize, threshold: f64) -> bool {
    let occupied = like + unlike;
    // No neighbours: nothing to object to.
    occupied == 0 || like as f64 / occupied as f64 >= threshold
}
