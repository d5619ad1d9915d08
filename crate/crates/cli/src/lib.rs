//! Expression language, reports and subcommands for the `grp` tool.

pub mod commands;
pub mod dsl;
pub mod eval;
pub mod report;

pub use commands::run;
pub use dsl::{parse, render, Expr, ExprKind, ParseError, Pos, Span};
pub use eval::{evaluate, evaluate_with, EvalError};
pub use report::{Report, REPORT_SCHEMA};
