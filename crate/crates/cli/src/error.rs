use thiserror::Error;

/// Failures surfaced by the command-line front end. Each maps to a stable
/// process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Mismatch(String),

    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl From<centrality_core::Error> for CliError {
    fn from(err: centrality_core::Error) -> Self {
        CliError::Usage(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
