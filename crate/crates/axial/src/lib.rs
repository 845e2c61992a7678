//! File formats, reports and the command-line front end for `axial-core`.

pub mod cli;
pub mod format;
pub mod report;
pub mod source;

pub use cli::{run, Outcome};
