use std::io;

use wsqopt_core::Error as CoreError;

/// Failure of a command, classified by its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("solver failure: {0}")]
    Solver(#[from] CoreError),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("malformed input: {0}")]
    Format(String),
}

impl CliError {
    pub fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Format(_) => 2,
            CliError::Solver(_) | CliError::Io(_) => 3,
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Format(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Format(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
