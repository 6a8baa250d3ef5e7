use std::io;

use thiserror::Error;

/// Exit code for successful runs.
pub const EXIT_OK: u8 = 0;
/// Exit code for bad flags, unreadable or malformed input.
pub const EXIT_USAGE: u8 = 1;
/// Exit code for a failed assertion or an oracle disagreement.
pub const EXIT_ASSERTION: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] su12_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("malformed input: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;
