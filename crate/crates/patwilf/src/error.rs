use std::path::PathBuf;

use patwilf_core::stats::DaggerViolation;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] patwilf_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("statistic `{0}` is already registered")]
    Duplicate(String),
    #[error("statistic `{name}` is not additive: {violation}")]
    NotAdditive {
        name: String,
        violation: DaggerViolation,
    },
}
