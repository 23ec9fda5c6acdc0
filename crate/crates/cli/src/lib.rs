//! Command-line front end: polynomial ingestion, run specification and
//! CSV/JSON emission. All numerical work is delegated to `fracroot_core`.

pub mod input;
pub mod output;
pub mod spec;

use std::fmt;

pub use input::{parse_coeff_list, parse_polynomial_file, parse_polynomial_text, InputError};
pub use spec::{Command, Format, RunSpec};

/// A failed run, carrying the process exit code it maps to.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments, bad polynomial or invalid configuration (exit 1).
    Validation(String),
    /// Unreadable input (exit 2).
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Io(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(msg) => write!(f, "error: {msg}"),
            CliError::Io(msg) => write!(f, "I/O error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        match e {
            InputError::Io { .. } => CliError::Io(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<fracroot_core::Error> for CliError {
    fn from(e: fracroot_core::Error) -> Self {
        CliError::Validation(e.to_string())
    }
}

/// Validates `spec`, runs the requested command and returns the output
/// document.
pub fn run(spec: &RunSpec) -> Result<String, CliError> {
    let plan = spec.plan()?;
    Ok(plan.execute(spec.format, spec.trace))
}
