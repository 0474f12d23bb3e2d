//! Experiment harness for the black widow optimizer family.
//!
//! The `msbwoa` binary wraps this library; the pieces are exposed so
//! integration tests can drive them directly.

pub mod cli;
pub mod config;
pub mod diagnostics;
pub mod experiment;
pub mod output;
pub mod stats;

/// Harness errors, split by exit code: usage/config problems exit 2,
/// internal failures exit 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Usage(m) | Self::Internal(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::Internal(e.to_string())
    }
}
