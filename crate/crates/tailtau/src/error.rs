use std::path::PathBuf;

/// Errors of the IO/pipeline layer, carrying enough context to map onto the
/// CLI exit-code contract.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] tailtau_core::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {message}")]
    Format { path: PathBuf, message: String },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("insufficient overlap: {overlap} common days, need at least {needed}")]
    InsufficientOverlap { overlap: usize, needed: usize },

    #[error("{0}")]
    Data(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn format(path: impl Into<PathBuf>, message: impl Into<String>) -> Self {
        Error::Format {
            path: path.into(),
            message: message.into(),
        }
    }

    /// Process exit code: 2 usage/config, 3 data insufficiency, 4 internal
    /// numerical failure.
    pub fn exit_code(&self) -> i32 {
        use tailtau_core::Error as Core;
        match self {
            Error::Core(core) => match core {
                Core::EmptySample
                | Core::InsufficientData { .. }
                | Core::TooFewExceedances { .. }
                | Core::TooFewJointExceedances { .. }
                | Core::DegenerateExceedances => 3,
                Core::NonPositiveExtremal | Core::DegenerateWeights => 4,
                _ => 2,
            },
            Error::InsufficientOverlap { .. } | Error::Data(_) => 3,
            Error::Io { .. } | Error::Format { .. } | Error::Config(_) => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
