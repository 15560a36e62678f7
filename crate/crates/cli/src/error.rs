use std::path::PathBuf;

use thiserror::Error;

/// Failure of a CLI command, carrying its exit status.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] charpoly_core::Error),
    #[error("{0}")]
    Precondition(String),
    #[error("digest mismatch: {0}")]
    Mismatch(String),
}

impl CliError {
    /// 1 for I/O and parse failures, 2 for unmet preconditions, 3 for
    /// disagreeing results.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) => 1,
            CliError::Core(_) | CliError::Precondition(_) => 2,
            CliError::Mismatch(_) => 3,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}
