//! File formats, JSON output and the parallel driver around `drg-core`.

pub mod driver;
pub mod io;
pub mod json;

use std::path::PathBuf;

use drg_core::arrays::ArrayError;
use drg_core::catalog::CatalogError;
use drg_core::enumerate::EnumError;
use drg_core::graphcheck::GraphError;

pub use drg_core;

#[derive(Debug, thiserror::Error)]
pub enum DrgError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("checkpoint belongs to other constraints (expected hash {expected}, found {found})")]
    HashMismatch { expected: String, found: String },
    #[error("output {} is shorter than the checkpoint records ({found} < {expected} bytes)", path.display())]
    TruncatedOutput {
        path: PathBuf,
        expected: u64,
        found: u64,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Array(#[from] ArrayError),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{0}")]
    Usage(String),
}

impl DrgError {
    pub(crate) fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> DrgError {
        let path = path.into();
        move |source| DrgError::Io { path, source }
    }
}
