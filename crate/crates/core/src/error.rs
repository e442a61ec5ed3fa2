use thiserror::Error;

/// Errors produced anywhere in the library.
///
/// [`Error::category`] gives a stable one-word tag used by the command line
/// front end when reporting failures.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid PGM {field}: {reason}")]
    Format { field: &'static str, reason: String },

    #[error("invalid image: {0}")]
    InvalidImage(String),

    #[error("message needs {needed} bits but only {available} are available")]
    Capacity { needed: u64, available: u64 },

    #[error("framing: {0}")]
    Framing(String),

    #[error("undefined metric: {0}")]
    UndefinedMetric(String),

    #[error("training: {0}")]
    Training(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn category(&self) -> &'static str {
        match self {
            Error::Format { .. } => "format",
            Error::InvalidImage(_) => "image",
            Error::Capacity { .. } => "capacity",
            Error::Framing(_) => "framing",
            Error::UndefinedMetric(_) => "metric",
            Error::Training(_) => "training",
            Error::InvalidArgument(_) => "argument",
            Error::Io(_) => "io",
        }
    }

    pub(crate) fn format(field: &'static str, reason: impl Into<String>) -> Self {
        Error::Format {
            field,
            reason: reason.into(),
        }
    }
}
