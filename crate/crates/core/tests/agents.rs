use proptest::prelude::*;
use trisim_core::agents::*;
use trisim_core::numerics::Prng;

fn cfg() -> SchellingConfig {
    SchellingConfig::default()
}

/// Direct count of like fractions, written independently of the engine.
fn oracle_index(rows: &[&str]) -> f64 {
    let g: Vec<Vec<char>> = rows.iter().map(|r| r.chars().collect()).collect();
    let (h, w) = (g.len() as isize, g[0].len() as isize);
    let mut fractions = Vec::new();
    for r in 0..h {
        for c in 0..w {
            let me = g[r as usize][c as usize];
            if me == '.' {
                continue;
            }
            let (mut like, mut all) = (0, 0);
            for (dr, dc) in [(-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1)] {
                let (rr, cc) = (r + dr, c + dc);
                if rr < 0 || cc < 0 || rr >= h || cc >= w {
                    continue;
                }
                let other = g[rr as usize][cc as usize];
                if other != '.' {
                    all += 1;
                    like += (other == me) as i32;
                }
            }
            if all > 0 {
                fractions.push(like as f64 / all as f64);
            }
        }
    }
    fractions.iter().sum::<f64>() / fractions.len() as f64
}

fn checkerboard(n: usize) -> Vec<String> {
    (0..n)
        .map(|r| (0..n).map(|c| if (r + c) % 2 == 0 { 'A' } else { 'B' }).collect())
        .collect()
}

fn two_blocks() -> Vec<String> {
    (0..13).map(|_| "AAAAAAAABBBBBBBB".to_string()).collect()
}

fn board(rows: &[String]) -> Board {
    rows.join("\n").parse().unwrap()
}

#[test]
fn init_counts_and_determinism() {
    let a = init_board(&SchellingConfig { seed: 7, ..cfg() }).unwrap();
    let c = a.census();
    assert_eq!((c.a, c.b, c.empty), (94, 93, 21));
    assert_eq!(a, init_board(&SchellingConfig { seed: 7, ..cfg() }).unwrap());
    assert_ne!(a, init_board(&SchellingConfig { seed: 8, ..cfg() }).unwrap());
}

#[test]
fn all_empty_board() {
    let b = init_board(&SchellingConfig { frac_a: 0.0, frac_b: 0.0, frac_empty: 1.0, ..cfg() }).unwrap();
    assert!(b.cells().iter().all(|&c| c == Cell::Empty));
    assert!(segregation_index(&b).is_err());
}

#[test]
fn infeasible_fractions_rejected() {
    assert!(init_board(&SchellingConfig { frac_a: 0.7, ..cfg() }).is_err());
}

#[test]
fn checkerboard_index_matches_count() {
    let rows = checkerboard(4);
    let refs: Vec<&str> = rows.iter().map(String::as_str).collect();
    let got = segregation_index(&board(&rows)).unwrap();
    assert!((got - oracle_index(&refs)).abs() < 1e-15);
    assert!((got - 49.0 / 120.0).abs() < 1e-15);
    // Diagonal neighbours share the colour, so large boards approach 1/2.
    let big = segregation_index(&board(&checkerboard(64))).unwrap();
    assert!((big - 0.5).abs() < 0.01, "{big}");
}

#[test]
fn two_block_index() {
    let rows = two_blocks();
    let refs: Vec<&str> = rows.iter().map(String::as_str).collect();
    let got = segregation_index(&board(&rows)).unwrap();
    assert!((got - oracle_index(&refs)).abs() < 1e-15);
    assert!((got - 3963.0 / 4160.0).abs() < 1e-15);
}

#[test]
fn segregated_blocks_are_a_fixed_point() {
    let b = board(&two_blocks());
    let config = SchellingConfig { frac_a: 0.5, frac_b: 0.5, frac_empty: 0.0, ..cfg() };
    for seed in 0..5 {
        let (after, moved) = sweep(&b, &config, &mut Prng::new(seed));
        assert_eq!(moved, 0);
        assert_eq!(after, b);
    }
    for (r, c, _) in b.agents() {
        assert!(contentment(&b, r, c, 0.5).unwrap());
    }
}

#[test]
fn content_board_is_unchanged() {
    let b: Board = "AA.BB\nAA.BB".parse().unwrap();
    let (after, moved) = sweep(&b, &cfg(), &mut Prng::new(0));
    assert_eq!((after, moved), (b, 0));
}

#[test]
fn runs_are_reproducible() {
    for rule in [MoveRule::NearestSatisfying, MoveRule::RandomVacancy] {
        let c = SchellingConfig { seed: 99, move_rule: rule, ..cfg() };
        assert_eq!(run_schelling(&c).unwrap(), run_schelling(&c).unwrap());
    }
}

#[test]
fn segregation_emerges_from_random_start() {
    let trace = run_schelling(&cfg()).unwrap();
    let first = trace.sweeps[0].segregation_index.unwrap();
    let last = trace.sweeps.last().unwrap().segregation_index.unwrap();
    assert!(last > first, "{first} -> {last}");
    assert!(trace.converged);
}

#[test]
fn converged_board_is_a_fixed_point() {
    let c = SchellingConfig { seed: 3, ..cfg() };
    let trace = run_schelling(&c).unwrap();
    assert!(trace.converged);
    assert_eq!(trace.sweeps.last().unwrap().discontent, 0);
    for seed in 0..5 {
        let (after, moved) = sweep(&trace.final_state, &c, &mut Prng::new(seed));
        assert_eq!(moved, 0);
        assert_eq!(after, trace.final_state);
    }
}

#[test]
fn random_vacancy_rule_keeps_counts() {
    let c = SchellingConfig { seed: 5, move_rule: MoveRule::RandomVacancy, max_sweeps: 30, ..cfg() };
    let trace = run_schelling(&c).unwrap();
    let census = trace.final_state.census();
    assert_eq!((census.a, census.b, census.empty), (94, 93, 21));
    assert!(trace.sweeps.iter().skip(1).any(|s| s.moved > 0));
}

fn brute_line_discontent(line: &[Kind]) -> Vec<usize> {
    let n = line.len() as isize;
    (0..n)
        .filter(|&i| {
            let (mut like, mut all) = (0, 0);
            for j in (i - 4).max(0)..=(i + 4).min(n - 1) {
                if j != i {
                    all += 1;
                    like += (line[j as usize] == line[i as usize]) as usize;
                }
            }
            2 * like < all
        })
        .map(|i| i as usize)
        .collect()
}

#[test]
fn alternating_line_is_only_unhappy_at_the_ends() {
    let agents: Vec<Kind> = (0..70).map(|i| if i % 2 == 0 { Kind::A } else { Kind::B }).collect();
    let line = Line::new(agents.clone());
    let unhappy = line.discontent(0.5);
    assert_eq!(unhappy, brute_line_discontent(&agents));
    assert_eq!(unhappy, vec![1, 3, 66, 68]);
    // Interior agents sit at exactly one half.
    assert_eq!(line.neighbour_counts(30), (4, 4));
    // With a strict majority demand everybody would leave.
    assert_eq!(line.discontent(0.51).len(), 70);
}

#[test]
fn sorted_line_is_already_settled() {
    let agents: Vec<Kind> = (0..70).map(|i| if i < 35 { Kind::A } else { Kind::B }).collect();
    assert!(brute_line_discontent(&agents).is_empty());
    let trace = run_line(Line::new(agents), 0.5, 10, &mut Prng::new(0));
    assert!(trace.converged);
    assert_eq!(trace.sweeps.len(), 1);
}

#[test]
fn single_kind_line() {
    let trace = run_line(Line::new(vec![Kind::B; 70]), 0.5, 10, &mut Prng::new(0));
    assert!(trace.converged);
    assert_eq!(trace.sweeps[0].segregation_index, Some(1.0));
}

#[test]
fn line_model_segregates() {
    let trace = run_schelling_1d(11, 50);
    let first = trace.sweeps[0].segregation_index.unwrap();
    let last = trace.sweeps.last().unwrap().segregation_index.unwrap();
    assert!(trace.converged);
    assert!(last > first);
    assert_eq!(trace.final_state.len(), LINE_POPULATION);
    assert!(brute_line_discontent(trace.final_state.agents()).is_empty());
    assert_eq!(trace, run_schelling_1d(11, 50));
}

fn any_board() -> impl Strategy<Value = Board> {
    (2usize..9, 2usize..9).prop_flat_map(|(r, c)| {
        proptest::collection::vec(prop_oneof![Just(Cell::Empty), Just(Cell::A), Just(Cell::B)], r * c)
            .prop_map(move |cells| Board::new(r, c, cells).unwrap())
    })
}

proptest! {
    #[test]
    fn sweeps_conserve_counts(b in any_board(), seed in any::<u64>(), random in any::<bool>(), t in 0.0..=1.0f64) {
        let rule = if random { MoveRule::RandomVacancy } else { MoveRule::NearestSatisfying };
        let c = SchellingConfig { rows: b.rows(), cols: b.cols(), threshold: t, move_rule: rule, ..cfg() };
        let (after, _) = sweep(&b, &c, &mut Prng::new(seed));
        prop_assert_eq!(after.census(), b.census());
    }

    #[test]
    fn higher_threshold_grows_the_discontent_set(b in any_board(), t1 in 0.0..=1.0f64, t2 in 0.0..=1.0f64) {
        let (lo, hi) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
        for (r, c, _) in b.agents() {
            if !contentment(&b, r, c, lo).unwrap() {
                prop_assert!(!contentment(&b, r, c, hi).unwrap());
            }
        }
    }

    #[test]
    fn line_sweeps_conserve_population(seed in any::<u64>()) {
        let trace = run_schelling_1d(seed, 3);
        let a = trace.final_state.agents().iter().filter(|&&k| k == Kind::A).count();
        prop_assert_eq!(a, 35);
        prop_assert_eq!(trace.final_state.len(), 70);
    }
}
