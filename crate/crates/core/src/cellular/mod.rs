//! Two-state cellular automata: the 256 elementary rules on a finite row and
//! Conway's Game of Life on a finite grid.
//!
//! Both render as text with `.` for dead and `#` for live cells.

mod eca;
mod life;

pub use eca::{eca_run, eca_step, Boundary, CaRow, EcaRule};
pub use life::{life_run, life_step, LifeGrid, Topology};

pub(crate) fn parse_cell(ch: char) -> Option<bool> {
    match ch {
        '.' | '0' => Some(false),
        '#' | '1' => Some(true),
        _ => None,
    }
}

pub(crate) fn cell_char(alive: bool) -> char {
    if alive {
        '#'
    } else {
        '.'
    }
}
