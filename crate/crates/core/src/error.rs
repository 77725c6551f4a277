use std::path::PathBuf;

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("{path}:{line}: malformed record: {msg}")]
    Parse { path: PathBuf, line: usize, msg: String },

    #[error("dataset error: {0}")]
    Dataset(String),

    #[error("failed to load image for example `{id}`: {msg}")]
    ImageLoad { id: String, msg: String },

    #[error("image decode error: {0}")]
    ImageDecode(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("training error: {0}")]
    Train(String),

    #[error("detector failed for `{id}`: {msg}")]
    Detector { id: String, msg: String },

    #[error("generation backend failed for `{id}`: {msg}")]
    Backend { id: String, msg: String },

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("configuration invalid:\n{}", .0.join("\n"))]
    Config(Vec<String>),

    #[error("stage `{stage}` failed: {msg}")]
    Stage { stage: String, msg: String },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn dataset(msg: impl Into<String>) -> Self {
        Error::Dataset(msg.into())
    }

    /// Exit code for the CLI: 2 for configuration errors, 3 for stage
    /// failures, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Invalid(_) => 2,
            Error::Stage { .. } => 3,
            _ => 1,
        }
    }
}
