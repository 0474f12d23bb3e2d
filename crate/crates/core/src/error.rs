use thiserror::Error;

/// Errors reported before any objective evaluation takes place.
///
/// Contract violations inside hot loops (dimension mismatches, iterates
/// outside the unit interval) panic instead; see the individual operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid search space: {0}")]
    InvalidSpace(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown benchmark id: {0:?}")]
    UnknownBenchmark(String),
}

pub type Result<T> = std::result::Result<T, Error>;
