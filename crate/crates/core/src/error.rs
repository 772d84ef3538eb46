//! Error type shared across the crate.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{file}:{line}: {msg}")]
    Parse {
        file: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("unknown node '{0}'")]
    UnknownNode(String),

    #[error("time step {t} out of range [1, {max}]")]
    TimeOutOfRange { t: usize, max: usize },

    #[error("window underflow: t={t}, tau={tau} requires t - tau >= 1")]
    WindowUnderflow { t: usize, tau: usize },

    #[error("token '{0}' not present in graph")]
    UnknownToken(String),

    #[error("walk corpus is empty")]
    EmptyCorpus,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("non-finite value while {0}")]
    NonFinite(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(file: impl Into<PathBuf>, line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            file: file.into(),
            line,
            msg: msg.into(),
        }
    }
}
