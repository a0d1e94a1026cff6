//! CLI error classification onto process exit codes.

use std::fmt;
use std::process::ExitCode;

/// Failure classes: usage errors exit 1, validation errors 2, enumeration
/// guards 3.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Validation(String),
    Guard(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(1),
            CliError::Validation(_) => ExitCode::from(2),
            CliError::Guard(_) => ExitCode::from(3),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Validation(m) => write!(f, "error: {m}"),
            CliError::Guard(m) => write!(f, "enumeration guard: {m}"),
        }
    }
}

impl From<hopfwick::Error> for CliError {
    fn from(e: hopfwick::Error) -> Self {
        match e {
            hopfwick::Error::EnumerationGuard { .. } => CliError::Guard(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Validation(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
