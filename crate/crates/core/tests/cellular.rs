use trisim_core::cellular::*;
use trisim_core::numerics::Prng;

/// Brute-force elementary CA: explicit padding and integer rule lookup.
fn oracle_eca(seed: &[u8], rule: u8, steps: usize, wrap: bool) -> Vec<Vec<u8>> {
    let n = seed.len();
    let mut rows = vec![seed.to_vec()];
    for _ in 0..steps {
        let prev = rows.last().unwrap();
        let mut padded = Vec::with_capacity(n + 2);
        padded.push(if wrap { prev[n - 1] } else { 0 });
        padded.extend_from_slice(prev);
        padded.push(if wrap { prev[0] } else { 0 });
        let next = padded
            .windows(3)
            .map(|w| (rule >> (w[0] * 4 + w[1] * 2 + w[2])) & 1)
            .collect();
        rows.push(next);
    }
    rows
}

fn as_bits(row: &CaRow) -> Vec<u8> {
    row.cells().iter().map(|&b| b as u8).collect()
}

#[test]
fn random_rows_match_oracle() {
    let mut rng = Prng::new(2024);
    for rule in [30u8, 90, 110, 204] {
        for boundary in [Boundary::Zero, Boundary::Wrap] {
            for _ in 0..5 {
                let seed = CaRow::random(64, 0.5, boundary, &mut rng).unwrap();
                let got: Vec<_> = eca_run(&seed, &EcaRule::new(rule), 64).iter().map(as_bits).collect();
                assert_eq!(got, oracle_eca(&as_bits(&seed), rule, 64, boundary == Boundary::Wrap));
            }
        }
    }
}

#[test]
fn rule_30_triangle() {
    let seed = CaRow::centre_seed(63, Boundary::Zero).unwrap();
    let rows = eca_run(&seed, &EcaRule::new(30), 31);
    assert_eq!(rows.len(), 32);
    let expected = oracle_eca(&as_bits(&seed), 30, 31, false);
    for (t, row) in rows.iter().enumerate() {
        assert_eq!(as_bits(row), expected[t]);
        // Light cone: nothing outside centre ± t.
        for (i, &c) in row.cells().iter().enumerate() {
            if (i as isize - 31).unsigned_abs() > t {
                assert!(!c, "cell {i} live at step {t}");
            }
        }
        // The left edge of the cone is always live under rule 30.
        assert!(row.cells()[31 - t]);
    }
}

#[test]
fn rule_30_centre_column() {
    let seed = CaRow::centre_seed(41, Boundary::Zero).unwrap();
    let column: Vec<u8> = eca_run(&seed, &EcaRule::new(30), 9)
        .iter()
        .map(|r| r.cells()[20] as u8)
        .collect();
    let oracle: Vec<u8> = oracle_eca(&as_bits(&seed), 30, 9, false).iter().map(|r| r[20]).collect();
    assert_eq!(column, oracle);
    assert_eq!(column, [1, 1, 0, 1, 1, 1, 0, 0, 1, 1]);
}

#[test]
fn zero_boundary_equals_infinite_lattice_inside_light_cone() {
    let mut rng = Prng::new(5);
    let core = CaRow::random(16, 0.5, Boundary::Zero, &mut rng).unwrap();
    let steps = 20;
    let mut wide = vec![false; steps];
    wide.extend_from_slice(core.cells());
    wide.extend(std::iter::repeat(false).take(steps));
    let narrow_seed = CaRow::new(wide.clone(), Boundary::Zero).unwrap();
    let mut huge = vec![false; 200];
    huge.extend_from_slice(&wide);
    huge.extend(std::iter::repeat(false).take(200));
    let huge_seed = CaRow::new(huge, Boundary::Zero).unwrap();
    let a = eca_run(&narrow_seed, &EcaRule::new(110), steps);
    let b = eca_run(&huge_seed, &EcaRule::new(110), steps);
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.cells(), &y.cells()[200..200 + wide.len()]);
    }
}

#[test]
fn eca_is_pure() {
    let mut rng = Prng::new(77);
    let seed = CaRow::random(50, 0.3, Boundary::Wrap, &mut rng).unwrap();
    assert_eq!(eca_run(&seed, &EcaRule::new(110), 40), eca_run(&seed, &EcaRule::new(110), 40));
}

/// Life rule straight from its statement, for one 3x3 neighbourhood.
fn oracle_centre(bits: u16) -> bool {
    let centre = bits >> 4 & 1 == 1;
    let neighbours = (bits & !(1 << 4)).count_ones();
    if centre {
        neighbours == 2 || neighbours == 3
    } else {
        neighbours == 3
    }
}

#[test]
fn life_truth_table_is_exhaustive() {
    for bits in 0u16..512 {
        let cells: Vec<bool> = (0..9).map(|i| bits >> i & 1 == 1).collect();
        let mut g = LifeGrid::empty(5, 5, Topology::DeadBorder).unwrap();
        for (i, &alive) in cells.iter().enumerate() {
            g.set(1 + i / 3, 1 + i % 3, alive);
        }
        assert_eq!(life_step(&g).get(2, 2), oracle_centre(bits), "neighbourhood {bits:09b}");
    }
}

#[test]
fn glider_travels_diagonally() {
    let mut g = LifeGrid::empty(16, 16, Topology::Torus).unwrap();
    g.stamp(".#.\n..#\n###", 2, 2).unwrap();
    let frames = life_run(&g, 64);
    for k in 1..=16 {
        assert_eq!(frames[4 * k], g.translated(k as isize, k as isize));
    }
}

#[test]
fn life_is_pure() {
    let mut rng = Prng::new(12);
    let g = LifeGrid::random(20, 30, 0.35, Topology::Torus, &mut rng).unwrap();
    assert_eq!(life_run(&g, 25), life_run(&g, 25));
}
