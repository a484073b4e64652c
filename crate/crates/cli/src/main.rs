use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use trisim_cli::output::write_outputs;
use trisim_cli::{execute, parse_config, print_config, CliError, RealismReport, RunFile, RunResult};

#[derive(Parser)]
#[command(name = "trisim", version, about = "Deterministic toy simulations: orbits, automata, agents, Monte Carlo")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a configuration and write its output files.
    Run {
        config: PathBuf,
        /// Output path prefix; overrides `out` in the file.
        #[arg(long)]
        out: Option<String>,
        /// Overrides `seed` in the file.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Parse a configuration and print the realism report.
    Validate { config: PathBuf },
}

fn load(path: &Path) -> Result<RunFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })?;
    parse_config(&text).map_err(|source| CliError::Config { path: path.display().to_string(), source })
}

fn default_prefix(path: &Path) -> String {
    path.file_stem().map_or_else(|| "trisim".into(), |s| s.to_string_lossy().into_owned())
}

fn summary(result: &RunResult) -> String {
    match result {
        RunResult::NBody(r) => {
            let last = r.samples.last().expect("t = 0 is always sampled");
            format!("{} steps, {} samples, final a = {:e} m, e = {:.6}", r.steps, r.samples.len(), last.a, last.e)
        }
        RunResult::Eca(rows) => format!("{} rows", rows.len()),
        RunResult::Life(g) => format!("{} generations, final population {}", g.len(), g.last().map_or(0, |g| g.population())),
        RunResult::Schelling(t) => trace_summary(&t.sweeps, t.converged),
        RunResult::Schelling1d(t) => trace_summary(&t.sweeps, t.converged),
        RunResult::Mc(e) => format!("mean {} ± {} (n = {})", e.mean, e.std_error, e.n),
    }
}

fn trace_summary(sweeps: &[trisim_core::agents::SweepRecord], converged: bool) -> String {
    let index = |i: usize| sweeps[i].segregation_index.map_or("n/a".into(), |v| format!("{v:.4}"));
    format!(
        "{} sweeps, {}, segregation index {} -> {}",
        sweeps.len() - 1,
        if converged { "converged" } else { "not converged" },
        index(0),
        index(sweeps.len() - 1)
    )
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Validate { config } => {
            let file = load(&config)?;
            print!("{}", print_config(&file));
            println!("{}", RealismReport::for_config(&file.config));
        }
        Command::Run { config, out, seed } => {
            let mut file = load(&config)?;
            if let Some(seed) = seed {
                file.config.set_seed(seed);
            }
            if out.is_some() {
                file.out = out;
            }
            let prefix = file.out.clone().unwrap_or_else(|| default_prefix(&config));
            print!("{}", print_config(&file));
            let report = RealismReport::for_config(&file.config);
            for w in &report.warnings {
                eprintln!("warning: {}: {}", w.key, w.message);
            }
            let result = execute(&file.config)?;
            println!("{}", summary(&result));
            for path in write_outputs(&result, &prefix)? {
                println!("wrote {}", path.display());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("trisim: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
