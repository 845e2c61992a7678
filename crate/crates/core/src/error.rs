use alloc::string::String;
use alloc::vec::Vec;

use crate::Gen;

/// Failures of the wall, strip and quotient stages.
///
/// Presentation validation has its own error type,
/// [`ValidationError`](crate::presentation::ValidationError).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,
    #[error("generator {generator} at position {position} is out of range")]
    BadGenerator { position: usize, generator: Gen },
    /// The path spelled by the word bends between `position` and the next letter.
    #[error("not a wall word: labels at positions {position} and {next} are not straight ({first} then {second})")]
    NotAWallWord {
        position: usize,
        next: usize,
        first: Gen,
        second: Gen,
    },
    #[error("wall of length {wall} does not divide g-length {n}")]
    LengthMismatch { wall: usize, n: usize },
    /// Two periodic completions share one initial triangle.
    #[error("ambiguous strip: initial triangle {triangle:?} has {count} periodic completions")]
    AmbiguousStrip { triangle: [Gen; 3], count: usize },
    #[error("brute-force search over {size} labellings exceeds the limit")]
    SearchTooLarge { size: u128 },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}

pub(crate) fn describe(seq: &[Gen]) -> String {
    let parts: Vec<String> = seq.iter().map(|g| alloc::format!("{g}")).collect();
    parts.join(",")
}
