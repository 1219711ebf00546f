use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A configuration or spec field is missing, malformed or violates a
    /// constraint; `field` is its dotted path.
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    /// A constructor or realization failure from the kernel.
    #[error("{context}: {source}")]
    Core {
        context: String,
        #[source]
        source: prismflex_core::Error,
    },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Parse(String),
}

impl Error {
    pub fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Field { field: field.into(), message: message.into() }
    }

    pub fn core(context: impl Into<String>, source: prismflex_core::Error) -> Self {
        Error::Core { context: context.into(), source }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}
