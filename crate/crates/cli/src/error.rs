use thiserror::Error;

/// Anything that maps to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed matrix document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Core(#[from] ybgate_core::Error),
}
