//! Command-line front end for `hfroots-core`: argument parsing, JSON reports,
//! the plumbing-graph file format and SVG output.

pub mod cli;
pub mod graph_json;
pub mod rational;
pub mod report;
pub mod verify;

use std::process::ExitCode;

use clap::Parser;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<hfroots_core::Error> for CliError {
    fn from(e: hfroots_core::Error) -> Self {
        if e.is_input_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::Internal(e.to_string())
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

/// Parses `args`, runs the command and maps the outcome to an exit code.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match cli::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli::run(&cli) {
        Ok(true) => ExitCode::from(EXIT_OK),
        Ok(false) => {
            eprintln!("hfroots: oracle mismatch");
            ExitCode::from(EXIT_MISMATCH)
        }
        Err(e) => {
            eprintln!("hfroots: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
