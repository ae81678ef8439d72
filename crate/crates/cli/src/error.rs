use fblow_core::Error;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),

    #[error("malformed JSON: {0}")]
    Json(String),

    #[error("i/o: {0}")]
    Io(String),

    #[error("{0}")]
    Usage(String),

    /// A budget ran out; the partial dossier has already been written.
    #[error("incomplete: {0}")]
    Incomplete(String),
}

impl CliError {
    /// 0 ok, 1 usage, 2 parse error, 3 budget exceeded, 4 internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Json(_) => 2,
            CliError::Incomplete(_) => 3,
            CliError::Core(e) => match e {
                Error::InvalidArgument(_) | Error::SelectionFailure(_) | Error::EmptyScheme => 1,
                Error::Syntax { .. } | Error::UnknownVariable(_) | Error::ExponentOverflow | Error::InvalidRing(_) => 2,
                Error::BudgetExceeded(_) => 3,
                Error::RingMismatch(_) | Error::Invariant(_) => 4,
            },
        }
    }
}
