//! Command implementations behind the `dconsec` binary.
//!
//! Each command writes to a caller-supplied sink and returns an [`Outcome`],
//! so tests can drive them without spawning a process.

pub mod cache;
pub mod commands;
pub mod render;
pub mod report;

use thiserror::Error;

pub use cache::ResultCache;
pub use report::{VerificationEntry, VerificationReport};

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    /// Verification found a mismatch, or a computation failed.
    pub const FAILURE: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const REFUSED: u8 = 3;
    pub const IO: u8 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Refused(dconsec::Error),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("cache {path}: {reason}")]
    Cache { path: String, reason: String },

    #[error(transparent)]
    Compute(dconsec::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Refused(_) => exit::REFUSED,
            CliError::Io { .. } | CliError::Cache { .. } => exit::IO,
            CliError::Compute(_) => exit::FAILURE,
        }
    }

    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<dconsec::Error> for CliError {
    fn from(e: dconsec::Error) -> Self {
        match e {
            dconsec::Error::Refused { .. } => CliError::Refused(e),
            other => CliError::Compute(other),
        }
    }
}

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    /// Ran, but the answer is negative (e.g. a verification mismatch).
    Failed,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Success => exit::OK,
            Outcome::Failed => exit::FAILURE,
        }
    }
}
