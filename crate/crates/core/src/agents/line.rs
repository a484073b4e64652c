use super::{is_content, segregation_index, Kind, Neighbourhoods, SegregationTrace, SweepRecord};
use crate::numerics::Prng;

pub const LINE_POPULATION: usize = 70;
/// Neighbours considered on each side.
pub const LINE_RADIUS: usize = 4;

/// A fully packed line of agents. Moving means leaving one's place and
/// squeezing in between two others (or at an end); everybody in between
/// shifts by one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line {
    agents: Vec<Kind>,
}

impl Line {
    pub fn new(agents: Vec<Kind>) -> Self {
        Line { agents }
    }

    /// Half A, half B (A gets the odd one out), shuffled.
    pub fn random(population: usize, rng: &mut Prng) -> Self {
        let mut agents: Vec<Kind> = (0..population)
            .map(|i| if i < population.div_ceil(2) { Kind::A } else { Kind::B })
            .collect();
        rng.shuffle(&mut agents);
        Line { agents }
    }

    pub fn agents(&self) -> &[Kind] {
        &self.agents
    }

    pub fn len(&self) -> usize {
        self.agents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.agents.is_empty()
    }

    fn counts(agents: &[Kind], i: usize, kind: Kind) -> (usize, usize) {
        let lo = i.saturating_sub(LINE_RADIUS);
        let hi = (i + LINE_RADIUS).min(agents.len() - 1);
        let like = (lo..=hi).filter(|&j| j != i && agents[j] == kind).count();
        (like, hi - lo - like)
    }

    /// Like and unlike neighbours of the agent at `i`.
    pub fn neighbour_counts(&self, i: usize) -> (usize, usize) {
        Self::counts(&self.agents, i, self.agents[i])
    }

    pub fn is_content(&self, i: usize, threshold: f64) -> bool {
        let (like, unlike) = self.neighbour_counts(i);
        is_content(like, unlike, threshold)
    }

    pub fn discontent(&self, threshold: f64) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.is_content(i, threshold)).collect()
    }

    /// The insertion index nearest to `i` at which the agent now at `i`
    /// would be content, ties going left. Its current place is excluded.
    fn nearest_satisfying(&self, i: usize, threshold: f64) -> Option<usize> {
        let kind = self.agents[i];
        let mut rest = self.agents.clone();
        rest.remove(i);
        let mut candidates: Vec<usize> = (0..=rest.len()).filter(|&g| g != i).collect();
        candidates.sort_by_key(|&g| (g.abs_diff(i), g));
        candidates.into_iter().find(|&g| {
            let mut trial = rest.clone();
            trial.insert(g, kind);
            let (like, unlike) = Self::counts(&trial, g, kind);
            is_content(like, unlike, threshold)
        })
    }
}

impl Neighbourhoods for Line {
    fn like_fractions(&self) -> Vec<f64> {
        (0..self.len())
            .filter_map(|i| {
                let (like, unlike) = self.neighbour_counts(i);
                (like + unlike > 0).then(|| like as f64 / (like + unlike) as f64)
            })
            .collect()
    }
}

fn record(line: &Line, threshold: f64, sweep: usize, moved: usize) -> SweepRecord {
    SweepRecord {
        sweep,
        discontent: line.discontent(threshold).len(),
        segregation_index: segregation_index(line).ok(),
        moved,
    }
}

/// One pass over all agents in random order; each discontent agent moves
/// to the nearest place that satisfies it.
fn sweep_line(line: &mut Line, threshold: f64, rng: &mut Prng) -> usize {
    // Track identities: indices shift as agents are reinserted.
    let mut ids: Vec<usize> = (0..line.len()).collect();
    let mut order = ids.clone();
    rng.shuffle(&mut order);
    let mut moved = 0;
    for id in order {
        let i = ids.iter().position(|&x| x == id).expect("every id is on the line");
        if line.is_content(i, threshold) {
            continue;
        }
        if let Some(g) = line.nearest_satisfying(i, threshold) {
            let kind = line.agents.remove(i);
            line.agents.insert(g, kind);
            let who = ids.remove(i);
            ids.insert(g, who);
            moved += 1;
        }
    }
    moved
}

/// Run the line model from a given arrangement.
pub fn run_line(line: Line, threshold: f64, max_sweeps: usize, rng: &mut Prng) -> SegregationTrace<Line> {
    let mut line = line;
    let mut sweeps = vec![record(&line, threshold, 0, 0)];
    for s in 1..=max_sweeps {
        if sweeps.last().expect("non-empty").discontent == 0 {
            break;
        }
        let moved = sweep_line(&mut line, threshold, rng);
        sweeps.push(record(&line, threshold, s, moved));
    }
    let converged = sweeps.last().expect("non-empty").discontent == 0;
    SegregationTrace {
        sweeps,
        final_state: line,
        converged,
    }
}

/// Seventy agents, four neighbours a side, content unless in the minority.
pub fn run_schelling_1d(seed: u64, max_sweeps: usize) -> SegregationTrace<Line> {
    let mut rng = Prng::new(seed);
    let line = Line::random(LINE_POPULATION, &mut rng);
    run_line(line, 0.5, max_sweeps, &mut rng)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Line {
        Line::new(s.chars().map(|c| if c == 'A' { Kind::A } else { Kind::B }).collect())
    }

    #[test]
    fn window_is_truncated_at_the_ends() {
        let l = parse("ABBBBBB");
        assert_eq!(l.neighbour_counts(0), (0, 4));
        assert_eq!(l.neighbour_counts(6), (4, 0));
        assert_eq!(l.neighbour_counts(3), (5, 1));
    }

    #[test]
    fn mover_goes_to_nearest_satisfying_gap() {
        // The A at 2 is surrounded by Bs; the nearest gap where it is not a
        // minority is at the A block on the far right.
        let mut l = parse("BBABBBBBBBAAAAAA");
        let i = 2;
        assert!(!l.is_content(i, 0.5));
        let g = l.nearest_satisfying(i, 0.5).unwrap();
        let kind = l.agents.remove(i);
        l.agents.insert(g, kind);
        assert!(l.is_content(g, 0.5));
        assert_eq!(l.len(), 16);
    }

    #[test]
    fn random_line_is_balanced() {
        let l = Line::random(70, &mut Prng::new(4));
        assert_eq!(l.len(), 70);
        assert_eq!(l.agents().iter().filter(|&&k| k == Kind::A).count(), 35);
    }
}
