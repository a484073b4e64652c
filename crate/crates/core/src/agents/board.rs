use std::fmt;
use std::str::FromStr;

use super::Neighbourhoods;
use crate::{Result, SimError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Cell {
    #[default]
    Empty,
    Agent(Kind),
}

impl Cell {
    pub const A: Cell = Cell::Agent(Kind::A);
    pub const B: Cell = Cell::Agent(Kind::B);

    pub fn kind(self) -> Option<Kind> {
        match self {
            Cell::Empty => None,
            Cell::Agent(k) => Some(k),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Cell::Empty => '.',
            Cell::A => 'A',
            Cell::B => 'B',
        }
    }

    pub fn from_char(ch: char) -> Option<Cell> {
        match ch {
            '.' => Some(Cell::Empty),
            'A' => Some(Cell::A),
            'B' => Some(Cell::B),
            _ => None,
        }
    }
}

/// Rectangular lattice with hard edges (no wrap-around).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Board {
    rows: usize,
    cols: usize,
    cells: Vec<Cell>,
}

/// Counts of (A, B, Empty).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Census {
    pub a: usize,
    pub b: usize,
    pub empty: usize,
}

impl Board {
    pub fn new(rows: usize, cols: usize, cells: Vec<Cell>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(SimError::config(format!("board must be at least 1x1, got {rows}x{cols}")));
        }
        if cells.len() != rows * cols {
            return Err(SimError::config(format!(
                "expected {} cells for a {rows}x{cols} board, got {}",
                rows * cols,
                cells.len()
            )));
        }
        Ok(Board { rows, cols, cells })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn get(&self, r: usize, c: usize) -> Cell {
        self.cells[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, cell: Cell) {
        self.cells[r * self.cols + c] = cell;
    }

    pub fn census(&self) -> Census {
        let mut census = Census { a: 0, b: 0, empty: 0 };
        for &cell in &self.cells {
            match cell {
                Cell::A => census.a += 1,
                Cell::B => census.b += 1,
                Cell::Empty => census.empty += 1,
            }
        }
        census
    }

    /// Occupied cells in row-major order.
    pub fn agents(&self) -> impl Iterator<Item = (usize, usize, Kind)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter_map(|(i, cell)| cell.kind().map(|k| (i / self.cols, i % self.cols, k)))
    }

    pub fn vacancies(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, &cell)| cell == Cell::Empty)
            .map(|(i, _)| (i / self.cols, i % self.cols))
    }

    /// Like and unlike agents among the Moore neighbours of `(r, c)` from the
    /// point of view of `kind`, treating `ignore` as empty.
    pub(crate) fn neighbour_counts(&self, r: usize, c: usize, kind: Kind, ignore: Option<(usize, usize)>) -> (usize, usize) {
        let (mut like, mut unlike) = (0, 0);
        for nr in r.saturating_sub(1)..=(r + 1).min(self.rows - 1) {
            for nc in c.saturating_sub(1)..=(c + 1).min(self.cols - 1) {
                if (nr, nc) == (r, c) || Some((nr, nc)) == ignore {
                    continue;
                }
                match self.get(nr, nc).kind() {
                    Some(k) if k == kind => like += 1,
                    Some(_) => unlike += 1,
                    None => {}
                }
            }
        }
        (like, unlike)
    }
}

impl Neighbourhoods for Board {
    fn like_fractions(&self) -> Vec<f64> {
        self.agents()
            .filter_map(|(r, c, k)| {
                let (like, unlike) = self.neighbour_counts(r, c, k, None);
                (like + unlike > 0).then(|| like as f64 / (like + unlike) as f64)
            })
            .collect()
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.cells.chunks(self.cols) {
            for cell in row {
                write!(f, "{}", cell.to_char())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for Board {
    type Err = SimError;

    /// Rows of `A`, `B` and `.`; blank lines ignored.
    fn from_str(s: &str) -> Result<Self> {
        let lines: Vec<&str> = s.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        let cols = lines.first().map_or(0, |l| l.chars().count());
        let mut cells = Vec::new();
        for (i, line) in lines.iter().enumerate() {
            if line.chars().count() != cols {
                return Err(SimError::config(format!("ragged board at row {i}")));
            }
            for ch in line.chars() {
                cells.push(Cell::from_char(ch).ok_or_else(|| SimError::config(format!("bad board character {ch:?}")))?);
            }
        }
        Board::new(lines.len(), cols, cells)
    }
}
