//! Front end for the `active-bijection` library: graph documents, the
//! `tutte`, `alpha`, `table` and `verify` commands, and the test corpus.

pub mod commands;
pub mod corpus;
pub mod document;
pub mod table;
pub mod verify;

use thiserror::Error;

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status when a check or a route comparison fails.
pub const EXIT_FAILURE: i32 = 1;
/// Exit status for unusable input.
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Library(#[from] active_bijection::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(active_bijection::Error::Invariant(_)) => EXIT_FAILURE,
            _ => EXIT_INPUT,
        }
    }
}

/// Text to print and the exit status.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Report {
    pub text: String,
    pub code: i32,
}
