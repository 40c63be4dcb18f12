//! Command-line front end for `degbern-core`.
//!
//! Every subcommand returns an [`Outcome`] instead of printing directly, so
//! the binary and the tests share one code path.

mod args;
pub mod document;
mod expand;
mod table;
mod verify;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;
use degbern_core::Error;

pub use args::{Cli, Command, Format};
pub use document::{CoefficientEntry, ExpansionDocument, LambdaValues};

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stdout: String, stderr: String) -> Self {
        Self { code, stdout, stderr }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Self::fail(exit_code(&e), String::new(), format!("error: {e}\n"))
    }
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_internal() {
        EXIT_INTERNAL
    } else {
        EXIT_USAGE
    }
}

/// Parses arguments (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => execute(&cli),
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
            _ => Outcome::fail(EXIT_USAGE, String::new(), e.to_string()),
        },
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Expand(a) => expand::run(a),
        Command::Verify(a) => verify::run(a),
        Command::Table(a) => table::run(a),
    };
    result.unwrap_or_else(Outcome::from)
}
