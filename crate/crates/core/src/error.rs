use thiserror::Error;

/// Errors raised by evaluators, table loaders, and codecs.
#[derive(Debug, Error)]
pub enum Error {
    /// Evaluation requested within the pole radius of a genuine pole.
    #[error("pole: {0}")]
    Pole(String),

    /// Argument outside the mathematical domain of the operation.
    #[error("domain: {0}")]
    Domain(String),

    /// Malformed input data; `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Ordinates out of ascending order; `line` is 1-based.
    #[error("order violation at line {line}: {message}")]
    Order { line: usize, message: String },

    /// Value outside the range covered by the available data.
    #[error("range: {0}")]
    Range(String),

    /// Inputs that contradict each other or their declared metadata.
    #[error("inconsistency: {0}")]
    Inconsistency(String),

    /// Sampling grid too coarse for the requested bandwidth.
    #[error("alias: {0}")]
    Alias(String),

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable category token, used by the CLI error surface.
    pub fn category(&self) -> &'static str {
        match self {
            Error::Pole(_) => "pole",
            Error::Domain(_) => "domain",
            Error::Parse { .. } => "parse",
            Error::Order { .. } => "order",
            Error::Range(_) => "range",
            Error::Inconsistency(_) => "inconsistency",
            Error::Alias(_) => "alias",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
