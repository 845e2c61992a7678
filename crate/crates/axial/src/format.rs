//! Presentation documents.
//!
//! Two encodings are accepted. The line format:
//!
//! ```text
//! # comments run to end of line
//! generators 7
//! relator 0 0 6
//! relator 0 2 3
//! ```
//!
//! and JSON, `{"generators": 7, "relators": [[0, 0, 6], [0, 2, 3]]}`.
//! Any rotation of a relator names the same class.

use axial_core::{Strictness, TrianglePresentation, ValidationError};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub generators: usize,
    pub relators: Vec<[usize; 3]>,
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `generators` line")]
    MissingGenerators,
    #[error("invalid JSON document: {0}")]
    Json(#[from] serde_json::Error),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

impl PresentationDoc {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        if text.trim_start().starts_with('{') {
            return Ok(serde_json::from_str(text)?);
        }
        let mut generators = None;
        let mut relators = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            let mut fields = content.split_whitespace();
            let Some(keyword) = fields.next() else {
                continue;
            };
            let numbers: Vec<usize> = fields
                .map(|f| f.parse().map_err(|_| syntax(line, format!("`{f}` is not an index"))))
                .collect::<Result<_, _>>()?;
            match keyword {
                "generators" => {
                    if generators.is_some() {
                        return Err(syntax(line, "repeated `generators` line"));
                    }
                    match numbers[..] {
                        [m] => generators = Some(m),
                        _ => return Err(syntax(line, "expected `generators <count>`")),
                    }
                }
                "relator" => match numbers[..] {
                    [i, j, k] => relators.push([i, j, k]),
                    _ => return Err(syntax(line, "expected `relator <i> <j> <k>`")),
                },
                other => return Err(syntax(line, format!("unknown keyword `{other}`"))),
            }
        }
        Ok(PresentationDoc {
            generators: generators.ok_or(FormatError::MissingGenerators)?,
            relators,
        })
    }

    /// One representative per relator class, in canonical order.
    pub fn from_presentation(pres: &TrianglePresentation) -> Self {
        PresentationDoc {
            generators: pres.generator_count(),
            relators: pres
                .relator_classes()
                .iter()
                .map(|c| c.map(usize::from))
                .collect(),
        }
    }

    pub fn build(&self, strictness: Strictness) -> Result<TrianglePresentation, ValidationError> {
        TrianglePresentation::new(self.generators, &self.relators, strictness)
    }

    pub fn to_lines(&self) -> String {
        let mut out = format!("generators {}\n", self.generators);
        for [i, j, k] in &self.relators {
            out.push_str(&format!("relator {i} {j} {k}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// SHA-256 of the canonical line encoding; equal for equal relator classes.
pub fn presentation_hash(pres: &TrianglePresentation) -> String {
    let digest = Sha256::digest(PresentationDoc::from_presentation(pres).to_lines().as_bytes());
    format!("{digest:x}")
}
