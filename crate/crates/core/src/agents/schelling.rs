use super::{is_content, segregation_index, Board, Cell, Kind, SegregationTrace, SweepRecord};
use crate::numerics::Prng;
use crate::{Result, SimError};

/// Where a discontent agent goes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MoveRule {
    /// A uniformly random empty cell, satisfying or not.
    RandomVacancy,
    /// The closest empty cell (Euclidean; ties in row-major order) where the
    /// agent would be content. Stays put if there is none.
    #[default]
    NearestSatisfying,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchellingConfig {
    pub rows: usize,
    pub cols: usize,
    pub frac_a: f64,
    pub frac_b: f64,
    pub frac_empty: f64,
    /// Minimum like fraction among occupied neighbours to stay put.
    pub threshold: f64,
    pub max_sweeps: usize,
    pub move_rule: MoveRule,
    pub seed: u64,
}

impl Default for SchellingConfig {
    fn default() -> Self {
        SchellingConfig {
            rows: 13,
            cols: 16,
            frac_a: 0.45,
            frac_b: 0.45,
            frac_empty: 0.1,
            threshold: 0.5,
            max_sweeps: 100,
            move_rule: MoveRule::NearestSatisfying,
            seed: 0,
        }
    }
}

impl SchellingConfig {
    pub fn validate(&self) -> Result<()> {
        if self.rows == 0 || self.cols == 0 {
            return Err(SimError::config(format!("board must be at least 1x1, got {}x{}", self.rows, self.cols)));
        }
        let fracs = [self.frac_a, self.frac_b, self.frac_empty];
        if fracs.iter().any(|f| !(0.0..=1.0).contains(f)) {
            return Err(SimError::config(format!("fractions must lie in [0, 1], got {fracs:?}")));
        }
        let sum: f64 = fracs.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(SimError::config(format!("fractions must sum to 1, got {sum}")));
        }
        if !(0.0..=1.0).contains(&self.threshold) {
            return Err(SimError::config(format!("threshold must lie in [0, 1], got {}", self.threshold)));
        }
        Ok(())
    }

    /// Cell counts (A, B, Empty) by largest remainder: each kind gets the
    /// floor of its quota, leftover cells go to the largest fractional parts,
    /// ties resolved in the order A, B, Empty.
    pub fn counts(&self) -> Result<[usize; 3]> {
        self.validate()?;
        let n = self.rows * self.cols;
        let quotas = [self.frac_a, self.frac_b, self.frac_empty].map(|f| f * n as f64);
        let mut counts = quotas.map(|q| q.floor() as usize);
        let assigned: usize = counts.iter().sum();
        let mut order = [0usize, 1, 2];
        // Stable sort keeps A, B, Empty order among equal remainders.
        order.sort_by(|&i, &j| (quotas[j] - quotas[j].floor()).total_cmp(&(quotas[i] - quotas[i].floor())));
        for &k in order.iter().take(n.saturating_sub(assigned)) {
            counts[k] += 1;
        }
        if counts.iter().sum::<usize>() != n {
            return Err(SimError::config("fractions cannot be apportioned on this board"));
        }
        Ok(counts)
    }
}

fn populated_board(config: &SchellingConfig, rng: &mut Prng) -> Result<Board> {
    let [a, b, empty] = config.counts()?;
    let mut cells = Vec::with_capacity(a + b + empty);
    cells.extend(std::iter::repeat(Cell::A).take(a));
    cells.extend(std::iter::repeat(Cell::B).take(b));
    cells.extend(std::iter::repeat(Cell::Empty).take(empty));
    rng.shuffle(&mut cells);
    Board::new(config.rows, config.cols, cells)
}

/// Random placement with the exact counts of [`SchellingConfig::counts`],
/// shuffled by a generator seeded from `config.seed`.
pub fn init_board(config: &SchellingConfig) -> Result<Board> {
    populated_board(config, &mut Prng::new(config.seed))
}

/// Whether the agent at `(r, c)` is content. Agents without occupied
/// neighbours are content.
pub fn contentment(board: &Board, r: usize, c: usize, threshold: f64) -> Result<bool> {
    if r >= board.rows() || c >= board.cols() {
        return Err(SimError::domain(format!("({r}, {c}) is off the board")));
    }
    let kind = board
        .get(r, c)
        .kind()
        .ok_or_else(|| SimError::domain(format!("cell ({r}, {c}) is empty")))?;
    let (like, unlike) = board.neighbour_counts(r, c, kind, None);
    Ok(is_content(like, unlike, threshold))
}

fn discontent_count(board: &Board, threshold: f64) -> usize {
    board
        .agents()
        .filter(|&(r, c, k)| {
            let (like, unlike) = board.neighbour_counts(r, c, k, None);
            !is_content(like, unlike, threshold)
        })
        .count()
}

fn destination(board: &Board, from: (usize, usize), kind: Kind, config: &SchellingConfig, rng: &mut Prng) -> Option<(usize, usize)> {
    match config.move_rule {
        MoveRule::RandomVacancy => {
            let empties: Vec<_> = board.vacancies().collect();
            (!empties.is_empty()).then(|| empties[rng.below(empties.len())])
        }
        MoveRule::NearestSatisfying => {
            let mut best: Option<((usize, usize), usize)> = None;
            for (r, c) in board.vacancies() {
                let (like, unlike) = board.neighbour_counts(r, c, kind, Some(from));
                if !is_content(like, unlike, config.threshold) {
                    continue;
                }
                let d2 = r.abs_diff(from.0).pow(2) + c.abs_diff(from.1).pow(2);
                if best.map_or(true, |(_, bd)| d2 < bd) {
                    best = Some(((r, c), d2));
                }
            }
            best.map(|(cell, _)| cell)
        }
    }
}

/// Visit every agent once in a random order; each discontent agent moves
/// immediately according to `config.move_rule`. Returns the new board and
/// the number of moves.
pub fn sweep(board: &Board, config: &SchellingConfig, rng: &mut Prng) -> (Board, usize) {
    let mut board = board.clone();
    let mut order: Vec<(usize, usize)> = board.agents().map(|(r, c, _)| (r, c)).collect();
    rng.shuffle(&mut order);
    let mut moved = 0;
    for (r, c) in order {
        let kind = board.get(r, c).kind().expect("visited agents have not moved yet");
        let (like, unlike) = board.neighbour_counts(r, c, kind, None);
        if is_content(like, unlike, config.threshold) {
            continue;
        }
        if let Some((nr, nc)) = destination(&board, (r, c), kind, config, rng) {
            board.set(r, c, Cell::Empty);
            board.set(nr, nc, Cell::Agent(kind));
            moved += 1;
        }
    }
    (board, moved)
}

fn record(board: &Board, threshold: f64, sweep: usize, moved: usize) -> SweepRecord {
    SweepRecord {
        sweep,
        discontent: discontent_count(board, threshold),
        segregation_index: segregation_index(board).ok(),
        moved,
    }
}

/// Sweep a board until nobody is discontent or `max_sweeps` is reached.
pub fn run_board(board: Board, config: &SchellingConfig, rng: &mut Prng) -> SegregationTrace<Board> {
    let mut board = board;
    let mut sweeps = vec![record(&board, config.threshold, 0, 0)];
    for s in 1..=config.max_sweeps {
        if sweeps.last().expect("non-empty").discontent == 0 {
            break;
        }
        let (next, moved) = sweep(&board, config, rng);
        board = next;
        sweeps.push(record(&board, config.threshold, s, moved));
    }
    let converged = sweeps.last().expect("non-empty").discontent == 0;
    SegregationTrace {
        sweeps,
        final_state: board,
        converged,
    }
}

/// Initialise from the seed, then sweep to convergence or `max_sweeps`.
/// Placement and sweep order share one generator stream.
pub fn run_schelling(config: &SchellingConfig) -> Result<SegregationTrace<Board>> {
    let mut rng = Prng::new(config.seed);
    let board = populated_board(config, &mut rng)?;
    Ok(run_board(board, config, &mut rng))
}
