//! Command-line front end for the `regprod` library.
//!
//! [`run`] parses arguments, evaluates, renders a [`report::ReportDocument`]
//! and maps the outcome to an exit code:
//! 0 success, 1 verification failure, 2 usage error, 3 non-convergence.

pub mod args;
pub mod parse;
pub mod report;

mod commands;

use std::io::Write;

use clap::Parser;
use thiserror::Error;

use args::Cli;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_CONVERGED: i32 = 3;

/// Environment variable overriding `max_terms`.
pub const MAX_TERMS_ENV: &str = "REGPROD_MAX_TERMS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] regprod::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Library(_) => EXIT_USAGE,
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => EXIT_FAILED,
        }
    }
}

/// Runs with `argv` excluding the program name, writing to stdout/stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`], with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let args: Vec<String> = std::iter::once("regprod".to_string())
        .chain(argv.into_iter().map(Into::into))
        .collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match commands::execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if matches!(e, CliError::Usage(_) | CliError::Library(_)) {
                let _ = writeln!(err, "run 'regprod --help' for usage");
            }
            e.exit_code()
        }
    }
}
