use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by graph construction, file I/O, oracles and the bench harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge {index} ({source_node}, {target_node}) has an endpoint outside [0, {n})")]
    EndpointOutOfRange {
        index: usize,
        source_node: u64,
        target_node: u64,
        n: u64,
    },

    #[error("graph too large: {what} = {value} exceeds the limit {limit}")]
    TooLarge {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("cannot place {m} edges on a graph with no nodes")]
    NoNodes { m: u64 },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },

    #[error("labelings have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("oracle refuses {what} = {value}; limit is {limit}")]
    OracleLimit {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid experiment: {0}")]
    InvalidExperiment(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
