use std::path::PathBuf;

use thiserror::Error;

/// Process exit status: 0 certified, 1 verification failure, 2 usage or IO.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Certified = 0,
    VerificationFailed = 1,
    Usage = 2,
}

impl ExitCode {
    pub fn from_passed(passed: bool) -> Self {
        if passed {
            ExitCode::Certified
        } else {
            ExitCode::VerificationFailed
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Parse { path: PathBuf, line: usize, message: String },
    #[error(transparent)]
    Core(#[from] timegraph_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Core(timegraph_core::Error::CompletionStalled { .. })
            | CliError::Core(timegraph_core::Error::Internal { .. })
            | CliError::Core(timegraph_core::Error::EmbeddedData { .. }) => ExitCode::VerificationFailed,
            _ => ExitCode::Usage,
        }
    }
}
