use std::fmt;
use std::str::FromStr;

use super::{cell_char, parse_cell};
use crate::numerics::Prng;
use crate::{Result, SimError};

/// A Wolfram-numbered elementary rule. Neighbourhood `(l, c, r)` maps to
/// bit `4l + 2c + r` of the rule number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EcaRule {
    number: u8,
    table: [bool; 8],
}

impl EcaRule {
    pub fn new(number: u8) -> Self {
        EcaRule {
            number,
            table: std::array::from_fn(|b| number >> b & 1 == 1),
        }
    }

    pub fn number(&self) -> u8 {
        self.number
    }

    pub fn table(&self) -> [bool; 8] {
        self.table
    }

    #[inline]
    pub fn apply(&self, left: bool, centre: bool, right: bool) -> bool {
        self.table[(left as usize) << 2 | (centre as usize) << 1 | right as usize]
    }
}

/// What lies beyond the ends of a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Boundary {
    /// Permanently dead cells. Matches the infinite lattice as long as the
    /// live region never reaches the edges.
    #[default]
    Zero,
    /// The row is a ring.
    Wrap,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CaRow {
    cells: Vec<bool>,
    boundary: Boundary,
}

impl CaRow {
    pub fn new(cells: Vec<bool>, boundary: Boundary) -> Result<Self> {
        if cells.is_empty() {
            return Err(SimError::config("row width must be at least 1"));
        }
        Ok(CaRow { cells, boundary })
    }

    /// A single live cell at index `width / 2`.
    pub fn centre_seed(width: usize, boundary: Boundary) -> Result<Self> {
        let mut cells = vec![false; width];
        if let Some(c) = cells.get_mut(width / 2) {
            *c = true;
        }
        CaRow::new(cells, boundary)
    }

    /// Each cell live with probability `density`.
    pub fn random(width: usize, density: f64, boundary: Boundary, rng: &mut Prng) -> Result<Self> {
        if !(0.0..=1.0).contains(&density) {
            return Err(SimError::config(format!("density must lie in [0, 1], got {density}")));
        }
        CaRow::new((0..width).map(|_| rng.next_f64() < density).collect(), boundary)
    }

    pub fn width(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn live_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    pub fn mirrored(&self) -> CaRow {
        let mut cells = self.cells.clone();
        cells.reverse();
        CaRow { cells, boundary: self.boundary }
    }

    pub fn with_boundary(mut self, boundary: Boundary) -> Self {
        self.boundary = boundary;
        self
    }
}

impl fmt::Display for CaRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.cells.iter().try_for_each(|&c| write!(f, "{}", cell_char(c)))
    }
}

impl FromStr for CaRow {
    type Err = SimError;

    /// `.`/`0` dead, `#`/`1` live; zero boundary.
    fn from_str(s: &str) -> Result<Self> {
        let cells = s
            .trim()
            .chars()
            .map(|ch| parse_cell(ch).ok_or_else(|| SimError::config(format!("bad cell character {ch:?}"))))
            .collect::<Result<Vec<_>>>()?;
        CaRow::new(cells, Boundary::Zero)
    }
}

pub fn eca_step(row: &CaRow, rule: &EcaRule) -> CaRow {
    let c = &row.cells;
    let n = c.len();
    let edge = |i: usize| match row.boundary {
        Boundary::Zero => false,
        Boundary::Wrap => c[i],
    };
    let next = (0..n)
        .map(|i| {
            let left = if i == 0 { edge(n - 1) } else { c[i - 1] };
            let right = if i + 1 == n { edge(0) } else { c[i + 1] };
            rule.apply(left, c[i], right)
        })
        .collect();
    CaRow {
        cells: next,
        boundary: row.boundary,
    }
}

/// The seed followed by `steps` successive rows.
pub fn eca_run(seed: &CaRow, rule: &EcaRule, steps: usize) -> Vec<CaRow> {
    let mut rows = Vec::with_capacity(steps + 1);
    rows.push(seed.clone());
    for _ in 0..steps {
        let next = eca_step(rows.last().expect("non-empty"), rule);
        rows.push(next);
    }
    rows
}
