//! Serialisation of run results. Rendering is pure; [`write_outputs`] puts
//! each file in place atomically.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use trisim_core::agents::{Kind, Line, SweepRecord};
use trisim_core::nbody::RunRecord;
use trisim_core::numerics::McEstimate;

use crate::{CliError, RunResult};

/// Grey level written for a live cell; dead cells are 0.
pub const PGM_ALIVE: u8 = 9;

pub fn nbody_csv(record: &RunRecord) -> String {
    let mut s = String::from("t,a,e,E,H\n");
    for p in &record.samples {
        let _ = writeln!(s, "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}", p.t, p.a, p.e, p.energy, p.angular_momentum);
    }
    s
}

pub fn trace_csv(sweeps: &[SweepRecord]) -> String {
    let mut s = String::from("sweep,discontent,seg_index\n");
    for r in sweeps {
        let index = r.segregation_index.map(|v| format!("{v:.16e}")).unwrap_or_default();
        let _ = writeln!(s, "{},{},{}", r.sweep, r.discontent, index);
    }
    s
}

pub fn mc_csv(est: &McEstimate) -> String {
    format!("mean,std_error,n\n{:.16e},{:.16e},{}\n", est.mean, est.std_error, est.n)
}

pub fn line_text(line: &Line) -> String {
    let mut s: String = line.agents().iter().map(|k| if *k == Kind::A { 'A' } else { 'B' }).collect();
    s.push('\n');
    s
}

/// Plain PGM ("P2") of a boolean image given as rows.
pub fn pgm<'a>(rows: impl ExactSizeIterator<Item = &'a [bool]>, width: usize) -> String {
    let height = rows.len();
    let mut s = format!("P2\n# 0 = dead (white), {PGM_ALIVE} = alive (black)\n{width} {height}\n{PGM_ALIVE}\n");
    for row in rows {
        let line: Vec<&str> = row.iter().map(|&c| if c { "9" } else { "0" }).collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s
}

/// File names and contents for a result, without touching the disk.
pub fn render(result: &RunResult, prefix: &str) -> Vec<(PathBuf, String)> {
    let path = |suffix: &str| PathBuf::from(format!("{prefix}{suffix}"));
    match result {
        RunResult::NBody(r) => vec![(path(".csv"), nbody_csv(r))],
        RunResult::Eca(rows) => {
            let text: Vec<String> = rows.iter().map(|r| format!("{r}\n")).collect();
            let width = rows.first().map_or(0, |r| r.width());
            vec![
                (path(".txt"), text.join("\n")),
                (path(".pgm"), pgm(rows.iter().map(|r| r.cells()), width)),
            ]
        }
        RunResult::Life(grids) => {
            let text: Vec<String> = grids.iter().map(|g| g.to_string()).collect();
            let last = grids.last().expect("a run holds at least the seed");
            vec![
                (path(".txt"), text.join("\n")),
                (path(".pgm"), pgm(last.cells().chunks(last.cols()), last.cols())),
            ]
        }
        RunResult::Schelling(t) => vec![
            (path("_trace.csv"), trace_csv(&t.sweeps)),
            (path("_final.txt"), t.final_state.to_string()),
        ],
        RunResult::Schelling1d(t) => vec![
            (path("_trace.csv"), trace_csv(&t.sweeps)),
            (path("_final.txt"), line_text(&t.final_state)),
        ],
        RunResult::Mc(e) => vec![(path(".csv"), mc_csv(e))],
    }
}

/// Write `contents` to a temporary file beside `path`, then rename it over
/// `path`.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<(), CliError> {
    let wrap = |source| CliError::Write { path: path.to_path_buf(), source };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    std::fs::create_dir_all(dir).map_err(wrap)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(wrap)?;
    tmp.write_all(contents).map_err(wrap)?;
    tmp.flush().map_err(wrap)?;
    tmp.persist(path).map_err(|e| wrap(e.error))?;
    Ok(())
}

pub fn write_outputs(result: &RunResult, prefix: &str) -> Result<Vec<PathBuf>, CliError> {
    let files = render(result, prefix);
    for (path, contents) in &files {
        write_atomic(path, contents.as_bytes())?;
    }
    Ok(files.into_iter().map(|(p, _)| p).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{execute, parse_config};

    fn run(text: &str) -> Vec<(PathBuf, String)> {
        render(&execute(&parse_config(text).unwrap().config).unwrap(), "p")
    }

    #[test]
    fn nbody_at_time_zero_is_one_row() {
        let files = run("kind = nbody\nt_total = 0\n");
        assert_eq!(files[0].0, PathBuf::from("p.csv"));
        let lines: Vec<&str> = files[0].1.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], "t,a,e,E,H");
        let a: f64 = lines[1].split(',').nth(1).unwrap().parse().unwrap();
        assert!((a - 6.25e7).abs() < 1.0);
    }

    #[test]
    fn floats_keep_seventeen_digits() {
        let files = run("kind = nbody\nt_total = 0\n");
        let row = files[0].1.lines().nth(1).unwrap();
        for field in row.split(',') {
            let mantissa = field.split('e').next().unwrap().replace(['-', '.'], "");
            assert_eq!(mantissa.len(), 17, "{field}");
        }
    }

    #[test]
    fn eca_image_is_space_time() {
        let files = run("kind = eca\nrule = 30\nwidth = 63\nsteps = 31\n");
        let pgm = &files[1].1;
        let mut lines = pgm.lines();
        assert_eq!(lines.next(), Some("P2"));
        assert!(lines.next().unwrap().starts_with('#'));
        assert_eq!(lines.next(), Some("63 32"));
        assert_eq!(lines.next(), Some("9"));
        let rows: Vec<&str> = lines.collect();
        assert_eq!(rows.len(), 32);
        assert!(rows.iter().all(|r| r.split(' ').count() == 63));
        assert_eq!(rows[0].split(' ').filter(|&v| v == "9").count(), 1);
        // frames are separated by blank lines
        assert_eq!(files[0].1.split("\n\n").count(), 32);
    }

    #[test]
    fn life_frames_and_final_image() {
        let files = run("kind = life\nrows = 5\ncols = 5\nsteps = 2\npattern = blinker\n");
        let frames: Vec<&str> = files[0].1.split("\n\n").collect();
        assert_eq!(frames.len(), 3);
        assert_eq!(frames[0], frames[2].trim_end());
        assert!(files[1].1.contains("\n5 5\n"));
    }

    #[test]
    fn schelling_files() {
        let files = run("kind = schelling\nmax_sweeps = 3\n");
        assert_eq!(files[0].0, PathBuf::from("p_trace.csv"));
        assert!(files[0].1.starts_with("sweep,discontent,seg_index\n0,"));
        assert_eq!(files[1].1.lines().count(), 13);
        let files = run("kind = schelling1d\n");
        assert_eq!(files[1].1.trim().len(), 70);
    }

    #[test]
    fn mc_single_row() {
        let files = run("kind = mc\nn = 2\nfunction = const\n");
        assert_eq!(files[0].1, "mean,std_error,n\n1.0000000000000000e0,0.0000000000000000e0,2\n");
    }

    #[test]
    fn atomic_write_replaces() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("nested/out.txt");
        write_atomic(&path, b"one").unwrap();
        write_atomic(&path, b"two").unwrap();
        assert_eq!(std::fs::read(&path).unwrap(), b"two");
        assert_eq!(std::fs::read_dir(path.parent().unwrap()).unwrap().count(), 1);
    }
}
