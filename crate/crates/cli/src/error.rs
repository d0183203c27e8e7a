use std::process::ExitCode;

use mobius_lattice::Error;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("malformed report: {0}")]
    MalformedReport(String),
    #[error("cap exceeded: {0}")]
    Cap(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            Self::Internal(_) => ExitCode::from(1),
            Self::Config(_) | Self::MalformedReport(_) | Self::Io(_) => ExitCode::from(2),
            Self::Cap(_) => ExitCode::from(3),
        }
    }
}

pub fn is_cap(e: &Error) -> bool {
    matches!(
        e,
        Error::OrderCapExceeded(_)
            | Error::IntervalTooLarge(_)
            | Error::PowersetTooLarge { .. }
            | Error::TooManySubspaces { .. }
            | Error::TooManyVertices(_)
    )
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if is_cap(&e) {
            Self::Cap(e.to_string())
        } else {
            Self::Config(e.to_string())
        }
    }
}
