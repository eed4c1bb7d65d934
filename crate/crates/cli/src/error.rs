use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Sdgen(#[from] sdgen::Error),

    #[error("{context}: {source}")]
    File { context: String, source: sdgen::Error },

    #[error("invalid manifest:\n  {}", .0.join("\n  "))]
    Manifest(Vec<String>),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        let inner = match self {
            CliError::Usage(_) => return 1,
            CliError::Sdgen(e) | CliError::File { source: e, .. } => e,
            CliError::Manifest(_) | CliError::Io(_) => return 2,
        };
        match inner {
            sdgen::Error::ResamplingCap { .. } => 3,
            _ => 2,
        }
    }
}

/// Attaches the file path to errors raised while loading it.
pub fn in_file<T>(path: &std::path::Path, r: sdgen::Result<T>) -> Result<T, CliError> {
    r.map_err(|source| CliError::File {
        context: path.display().to_string(),
        source,
    })
}
