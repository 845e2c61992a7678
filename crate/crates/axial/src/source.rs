use std::path::PathBuf;

use axial_core::{Strictness, TrianglePresentation, ValidationError};

use crate::format::{FormatError, PresentationDoc};

/// Where a presentation comes from: `builtin:<name>` or a file path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Builtin(String),
    File(PathBuf),
}

impl Source {
    pub fn parse(spec: &str) -> Self {
        match spec.strip_prefix("builtin:") {
            Some(name) => Source::Builtin(name.to_string()),
            None => Source::File(PathBuf::from(spec)),
        }
    }

    pub fn id(&self) -> String {
        match self {
            Source::Builtin(name) => format!("builtin:{name}"),
            Source::File(path) => path.display().to_string(),
        }
    }

    pub fn load(&self, strictness: Strictness) -> Result<TrianglePresentation, LoadError> {
        match self {
            Source::Builtin(name) => {
                TrianglePresentation::builtin(name).ok_or_else(|| LoadError::UnknownBuiltin(name.clone()))
            }
            Source::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io {
                    path: path.clone(),
                    source: e,
                })?;
                let doc = PresentationDoc::parse(&text)?;
                Ok(doc.build(strictness)?)
            }
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("unknown builtin presentation `{0}` (known: c1)")]
    UnknownBuiltin(String),
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{0}")]
    Invalid(#[from] ValidationError),
}
