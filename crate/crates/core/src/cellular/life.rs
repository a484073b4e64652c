use std::fmt;

use super::{cell_char, parse_cell};
use crate::numerics::Prng;
use crate::{Result, SimError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Topology {
    /// Edges wrap in both directions.
    #[default]
    Torus,
    /// Everything outside the grid is permanently dead.
    DeadBorder,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LifeGrid {
    rows: usize,
    cols: usize,
    cells: Vec<bool>,
    topology: Topology,
}

impl LifeGrid {
    pub fn empty(rows: usize, cols: usize, topology: Topology) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(SimError::config(format!("grid must be at least 1x1, got {rows}x{cols}")));
        }
        Ok(LifeGrid {
            rows,
            cols,
            cells: vec![false; rows * cols],
            topology,
        })
    }

    pub fn from_cells(rows: usize, cols: usize, cells: Vec<bool>, topology: Topology) -> Result<Self> {
        let mut g = LifeGrid::empty(rows, cols, topology)?;
        if cells.len() != rows * cols {
            return Err(SimError::config(format!(
                "expected {} cells for a {rows}x{cols} grid, got {}",
                rows * cols,
                cells.len()
            )));
        }
        g.cells = cells;
        Ok(g)
    }

    /// Parse rows of `.`/`#` (or `0`/`1`); blank lines are ignored.
    pub fn parse(text: &str, topology: Topology) -> Result<Self> {
        let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        let cols = lines.first().map_or(0, |l| l.chars().count());
        let mut cells = Vec::with_capacity(lines.len() * cols);
        for (i, line) in lines.iter().enumerate() {
            if line.chars().count() != cols {
                return Err(SimError::config(format!("ragged grid at row {i}")));
            }
            for ch in line.chars() {
                cells.push(parse_cell(ch).ok_or_else(|| SimError::config(format!("bad cell character {ch:?}")))?);
            }
        }
        LifeGrid::from_cells(lines.len(), cols, cells, topology)
    }

    pub fn random(rows: usize, cols: usize, density: f64, topology: Topology, rng: &mut Prng) -> Result<Self> {
        if !(0.0..=1.0).contains(&density) {
            return Err(SimError::config(format!("density must lie in [0, 1], got {density}")));
        }
        let cells = (0..rows * cols).map(|_| rng.next_f64() < density).collect();
        LifeGrid::from_cells(rows, cols, cells, topology)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.cells[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, alive: bool) {
        self.cells[r * self.cols + c] = alive;
    }

    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    pub fn population(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    /// Place `pattern` (rows of `.`/`#`) with its top-left corner at `(r, c)`,
    /// wrapping on a torus and clipping otherwise.
    pub fn stamp(&mut self, pattern: &str, r: usize, c: usize) -> Result<()> {
        let p = LifeGrid::parse(pattern, Topology::DeadBorder)?;
        for i in 0..p.rows {
            for j in 0..p.cols {
                let (rr, cc) = (r + i, c + j);
                let (rr, cc) = match self.topology {
                    Topology::Torus => (rr % self.rows, cc % self.cols),
                    Topology::DeadBorder if rr < self.rows && cc < self.cols => (rr, cc),
                    Topology::DeadBorder => continue,
                };
                if p.get(i, j) {
                    self.set(rr, cc, true);
                }
            }
        }
        Ok(())
    }

    /// Cyclic shift by `(dr, dc)`; cells pushed off a dead border are lost.
    pub fn translated(&self, dr: isize, dc: isize) -> LifeGrid {
        let mut out = LifeGrid { cells: vec![false; self.cells.len()], ..*self };
        let (rows, cols) = (self.rows as isize, self.cols as isize);
        for r in 0..rows {
            for c in 0..cols {
                if !self.get(r as usize, c as usize) {
                    continue;
                }
                let (nr, nc) = (r + dr, c + dc);
                let (nr, nc) = match self.topology {
                    Topology::Torus => (nr.rem_euclid(rows), nc.rem_euclid(cols)),
                    Topology::DeadBorder if (0..rows).contains(&nr) && (0..cols).contains(&nc) => (nr, nc),
                    Topology::DeadBorder => continue,
                };
                out.set(nr as usize, nc as usize, true);
            }
        }
        out
    }

    fn live_neighbours(&self, r: usize, c: usize) -> u8 {
        let mut n = 0;
        for dr in [-1isize, 0, 1] {
            for dc in [-1isize, 0, 1] {
                if dr == 0 && dc == 0 {
                    continue;
                }
                let (nr, nc) = (r as isize + dr, c as isize + dc);
                let (rows, cols) = (self.rows as isize, self.cols as isize);
                let alive = match self.topology {
                    Topology::Torus => self.get(nr.rem_euclid(rows) as usize, nc.rem_euclid(cols) as usize),
                    Topology::DeadBorder => {
                        (0..rows).contains(&nr) && (0..cols).contains(&nc) && self.get(nr as usize, nc as usize)
                    }
                };
                n += alive as u8;
            }
        }
        n
    }
}

impl fmt::Display for LifeGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.cells.chunks(self.cols) {
            for &c in row {
                write!(f, "{}", cell_char(c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// One synchronous generation: a live cell survives with 2 or 3 live Moore
/// neighbours, a dead cell is born with exactly 3.
pub fn life_step(grid: &LifeGrid) -> LifeGrid {
    let mut cells = Vec::with_capacity(grid.cells.len());
    for r in 0..grid.rows {
        for c in 0..grid.cols {
            let n = grid.live_neighbours(r, c);
            cells.push(matches!((grid.get(r, c), n), (true, 2 | 3) | (false, 3)));
        }
    }
    LifeGrid { cells, ..*grid }
}

pub fn life_run(seed: &LifeGrid, steps: usize) -> Vec<LifeGrid> {
    let mut frames = Vec::with_capacity(steps + 1);
    frames.push(seed.clone());
    for _ in 0..steps {
        let next = life_step(frames.last().expect("non-empty"));
        frames.push(next);
    }
    frames
}
