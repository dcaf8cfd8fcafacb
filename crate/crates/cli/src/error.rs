use fsind_core::pivotal::ValidationReport;
use fsind_core::Error;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("missing prerequisite: {0}")]
    MissingPrerequisite(String),
    #[error("validation failed with {} violation(s)", .0.violations.len())]
    Invalid(ValidationReport),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// 0 success, 1 validation failure or discrepancy, 2 usage or parse error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Usage(_) | CliError::MissingPrerequisite(_) => 2,
            CliError::Invalid(_) => 1,
            CliError::Core(e) => core_exit_code(e),
        }
    }
}

fn core_exit_code(e: &Error) -> i32 {
    match e {
        Error::Scalar(_)
        | Error::Document(_)
        | Error::UnknownExample(_)
        | Error::UnknownInvolution(_)
        | Error::MissingData(_)
        | Error::MissingComultiplication
        | Error::BoundExceeded { .. } => 2,
        _ => 1,
    }
}

pub type CliResult<T> = Result<T, CliError>;
