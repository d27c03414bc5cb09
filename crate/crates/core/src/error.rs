use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },

    #[error("unknown country code {0:?} (not in registry)")]
    UnknownCountry(String),

    #[error("registry: {0}")]
    Registry(String),

    #[error("invalid study window: {0}")]
    Window(String),

    #[error("empty cluster {0:?}")]
    EmptyCluster(String),

    #[error("reference year {reference} precedes first publication year {first}")]
    ReferenceBeforeFirstPublication { reference: i32, first: i32 },

    #[error("negative academic age {0}")]
    NegativeAge(i64),

    #[error("country {0:?} is not a node of the graph")]
    UnknownNode(String),

    #[error("gender provider {provider}: {message}")]
    Provider { provider: String, message: String },

    #[error("config: {0}")]
    Config(String),

    #[error("stage {stage:?} requires the output of stage {required:?}; run it first")]
    MissingUpstream { stage: String, required: String },

    #[error("stage {stage:?} failed: {message}")]
    Stage { stage: String, message: String },

    #[error("output directory is locked by another run ({0})")]
    Locked(PathBuf),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
