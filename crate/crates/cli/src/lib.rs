//! Run-file parsing, realism checks and output writers behind the `trisim`
//! binary.

pub mod config;
pub mod output;
pub mod realism;
mod run;

use std::path::PathBuf;

use thiserror::Error;
use trisim_core::SimError;

pub use config::{parse_config, print_config, ConfigError, RunConfig, RunFile};
pub use realism::{realism_guard, Classification, RealismReport, Warning};
pub use run::{execute, RunResult};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Config { path: String, source: ConfigError },

    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },

    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },

    #[error(transparent)]
    Sim(#[from] SimError),
}

impl CliError {
    /// Process exit status: 2 for anything wrong with the run file, 3 for
    /// failures while running or writing.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config { .. } | CliError::Read { .. } => 2,
            CliError::Sim(SimError::Config(_)) => 2,
            CliError::Sim(_) | CliError::Write { .. } => 3,
        }
    }
}
