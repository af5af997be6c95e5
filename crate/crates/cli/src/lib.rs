//! Expression language, REPL and subcommands of the `pga` tool.

pub mod ast;
pub mod commands;
pub mod error;
pub mod eval;
pub mod lexer;
pub mod parser;

pub use ast::Expr;
pub use error::{CliError, EvalError, ParseError};
pub use eval::Env;
pub use parser::{parse, parse_program};
