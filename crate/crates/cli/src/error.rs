use braidrep_core::Error;
use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("malformed input: {0}")]
    Format(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 usage or parse, 3 precondition, 4 genericity, 5 linking.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e {
                Error::NotPure | Error::NonIntegerWinding { .. } => 3,
                Error::NonGenericInput { .. } | Error::PunctureCollision { .. } | Error::SeparationViolated => 4,
                Error::NonZeroLinking { .. } => 5,
                _ => 2,
            },
            _ => 2,
        }
    }
}
