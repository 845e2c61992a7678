//! Argument parsing, dispatch and exit codes.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 invalid presentation,
//! 3 unsupported element, 4 internal error.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use axial_core::{Error, Gen, Strictness, TrianglePresentation};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::format::PresentationDoc;
use crate::report::{run_centralizer, run_link, run_strips};
use crate::source::{LoadError, Source};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "axial", version, about = "Centralizers of wall elements in triangle-presented groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a presentation is a triangle presentation.
    Validate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute the quotient graph of groups for Z(g)/<g>.
    Centralizer {
        #[command(flatten)]
        input: Input,
        /// Comma-separated generator indices of a positive wall word.
        #[arg(long, value_parser = parse_word)]
        word: WordArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// List the periodic strips adjacent to a wall.
    Strips {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_word)]
        wall: WordArg,
        /// Analyze the wall at this g-period (a multiple of its length).
        #[arg(long)]
        length: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Statistics of the vertex link.
    Link {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the relator classes in the line format or as JSON.
    Dump {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct Input {
    /// `builtin:c1` or a path to a presentation file.
    #[arg(value_name = "PRESENTATION")]
    positional: Option<String>,
    #[arg(long = "presentation", value_name = "PRESENTATION")]
    flag: Option<String>,
    /// Accept presentations whose link is not a generalized 3-gon.
    #[arg(long)]
    lenient: bool,
    /// Write the output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    #[value(alias = "structured")]
    Json,
    Dot,
}

#[derive(Clone, Debug)]
struct WordArg(Vec<Gen>);

fn parse_word(s: &str) -> Result<WordArg, String> {
    s.split(',')
        .map(|f| {
            let f = f.trim();
            f.parse::<Gen>().map_err(|_| format!("`{f}` is not a generator index"))
        })
        .collect::<Result<_, _>>()
        .map(WordArg)
}

/// Captured result of one invocation.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

impl Input {
    fn source(&self) -> Result<Source, Outcome> {
        match (&self.positional, &self.flag) {
            (Some(a), Some(b)) if a != b => Err(Outcome::fail(
                EXIT_USAGE,
                "error: presentation given twice with different values\n".into(),
            )),
            (Some(s), _) | (None, Some(s)) => Ok(Source::parse(s)),
            (None, None) => Err(Outcome::fail(EXIT_USAGE, "error: no presentation given\n".into())),
        }
    }

    fn strictness(&self) -> Strictness {
        if self.lenient {
            Strictness::Lenient
        } else {
            Strictness::Strict
        }
    }

    fn load(&self) -> Result<(String, TrianglePresentation), Outcome> {
        let source = self.source()?;
        match source.load(self.strictness()) {
            Ok(p) => Ok((source.id(), p)),
            Err(e) => Err(load_failure(&e)),
        }
    }
}

fn load_failure(e: &LoadError) -> Outcome {
    match e {
        LoadError::Invalid(v) => {
            let mut msg = format!("error: {v}\n");
            for violation in &v.violations {
                msg.push_str(&format!("  - {violation}\n"));
            }
            Outcome::fail(EXIT_INVALID, msg)
        }
        LoadError::Format(_) => Outcome::fail(EXIT_INVALID, format!("error: {e}\n")),
        LoadError::Io { .. } | LoadError::UnknownBuiltin(_) => Outcome::fail(EXIT_USAGE, format!("error: {e}\n")),
    }
}

fn pipeline_failure(e: &Error) -> Outcome {
    match e {
        Error::NotAWallWord { .. } => Outcome::fail(
            EXIT_UNSUPPORTED,
            format!(
                "error: {e}\nnote: only wall elements are supported; regular, median and general elements are out of scope\n"
            ),
        ),
        Error::EmptyWord | Error::BadGenerator { .. } | Error::LengthMismatch { .. } => {
            Outcome::fail(EXIT_UNSUPPORTED, format!("error: {e}\n"))
        }
        Error::AmbiguousStrip { .. } | Error::SearchTooLarge { .. } | Error::Invariant(_) => {
            Outcome::fail(EXIT_INTERNAL, format!("error: {e}\n"))
        }
    }
}

fn unsupported_format(format: Format) -> Outcome {
    Outcome::fail(
        EXIT_USAGE,
        format!("error: format {format:?} is not available for this command\n").to_lowercase(),
    )
}

fn deliver(out: &Option<PathBuf>, text: String) -> Outcome {
    match out {
        None => Outcome::ok(text),
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => Outcome::ok(String::new()),
            Err(e) => Outcome::fail(EXIT_USAGE, format!("error: cannot write {}: {e}\n", path.display())),
        },
    }
}

/// Runs one command line, capturing output instead of printing it.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome::fail(code, text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(o) | Err(o) => o,
    }
}

fn dispatch(command: Command) -> Result<Outcome, Outcome> {
    match command {
        Command::Validate { input, format } => {
            let (id, pres) = input.load()?;
            let text = match format {
                Format::Text => {
                    let mut text = format!(
                        "ok: {id} is a triangle presentation with m = {}, q = {}, {} relator classes\n",
                        pres.generator_count(),
                        pres.thickness(),
                        pres.relator_classes().len()
                    );
                    text.push_str(&run_link(&id, &pres).to_text());
                    for w in pres.warnings() {
                        text.push_str(&format!("warning: {w}\n"));
                    }
                    text
                }
                Format::Json => run_link(&id, &pres).to_json(),
                Format::Dot => return Err(unsupported_format(format)),
            };
            Ok(deliver(&input.out, text))
        }
        Command::Centralizer {
            input,
            word,
            format,
            timing,
        } => {
            let (id, pres) = input.load()?;
            let start = Instant::now();
            let mut report = run_centralizer(&id, &pres, &word.0).map_err(|e| pipeline_failure(&e))?;
            if timing {
                report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
                Format::Dot => report.to_dot(),
            };
            Ok(deliver(&input.out, text))
        }
        Command::Strips {
            input,
            wall,
            length,
            format,
        } => {
            let (id, pres) = input.load()?;
            let report = run_strips(&id, &pres, &wall.0, length).map_err(|e| pipeline_failure(&e))?;
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
                Format::Dot => return Err(unsupported_format(format)),
            };
            Ok(deliver(&input.out, text))
        }
        Command::Link { input, format } => {
            let (id, pres) = input.load()?;
            let report = run_link(&id, &pres);
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
                Format::Dot => return Err(unsupported_format(format)),
            };
            Ok(deliver(&input.out, text))
        }
        Command::Dump { input, format } => {
            let (_, pres) = input.load()?;
            let doc = PresentationDoc::from_presentation(&pres);
            let text = match format {
                Format::Text => doc.to_lines(),
                Format::Json => doc.to_json() + "\n",
                Format::Dot => return Err(unsupported_format(format)),
            };
            Ok(deliver(&input.out, text))
        }
    }
}
