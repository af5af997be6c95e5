use std::fmt;
use std::io;

use thiserror::Error;

/// A lexical or syntax error at a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError { line, col, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

/// An evaluation failure together with the sub-expression that raised it.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("in `{expr}`: {message}")]
pub struct EvalError {
    pub expr: String,
    pub message: String,
}

/// Any failure of a command, mapped onto the process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("evaluation error {0}")]
    Eval(#[from] EvalError),
    #[error("{0}")]
    Library(#[from] pga::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0} cells differ from the reference table")]
    GoldenMismatch(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::GoldenMismatch(_) => 3,
            _ => 1,
        }
    }
}
