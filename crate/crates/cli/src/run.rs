use trisim_core::agents::{run_schelling, run_schelling_1d, Board, Line, SegregationTrace};
use trisim_core::cellular::{eca_run, life_run, CaRow, EcaRule, LifeGrid};
use trisim_core::nbody::{self, RunRecord};
use trisim_core::numerics::{monte_carlo_mean, McEstimate, Prng};
use trisim_core::Result;

use crate::config::{EcaPattern, LifePattern, RunConfig};

const GLIDER: &str = ".#.\n..#\n###";
const BLINKER: &str = "###";
const BLOCK: &str = "##\n##";

#[derive(Debug, Clone, PartialEq)]
pub enum RunResult {
    NBody(RunRecord),
    /// Every row from the seed onwards.
    Eca(Vec<CaRow>),
    /// Every generation from the seed onwards.
    Life(Vec<LifeGrid>),
    Schelling(SegregationTrace<Board>),
    Schelling1d(SegregationTrace<Line>),
    Mc(McEstimate),
}

pub fn execute(config: &RunConfig) -> Result<RunResult> {
    Ok(match *config {
        RunConfig::NBody(r) => RunResult::NBody(nbody::run(&r.sim)?),
        RunConfig::Eca(c) => {
            let seed = match c.pattern {
                EcaPattern::Centre => CaRow::centre_seed(c.width, c.boundary)?,
                EcaPattern::Random => CaRow::random(c.width, c.density, c.boundary, &mut Prng::new(c.seed))?,
            };
            RunResult::Eca(eca_run(&seed, &EcaRule::new(c.rule), c.steps))
        }
        RunConfig::Life(c) => {
            let mut grid = LifeGrid::empty(c.rows, c.cols, c.topology)?;
            let (mr, mc) = (c.rows / 2, c.cols / 2);
            match c.pattern {
                LifePattern::Glider => grid.stamp(GLIDER, 0, 0)?,
                LifePattern::Blinker => grid.stamp(BLINKER, mr, mc.saturating_sub(1))?,
                LifePattern::Block => grid.stamp(BLOCK, mr.saturating_sub(1), mc.saturating_sub(1))?,
                LifePattern::Random => {
                    grid = LifeGrid::random(c.rows, c.cols, c.density, c.topology, &mut Prng::new(c.seed))?
                }
            }
            RunResult::Life(life_run(&grid, c.steps))
        }
        RunConfig::Schelling(c) => RunResult::Schelling(run_schelling(&c)?),
        RunConfig::Schelling1d(c) => RunResult::Schelling1d(run_schelling_1d(c.seed, c.max_sweeps)),
        RunConfig::Mc(c) => RunResult::Mc(monte_carlo_mean(|x| c.function.eval(x), c.a, c.b, c.n, c.seed)?),
    })
}
