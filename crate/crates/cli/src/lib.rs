//! Expression language and evaluator behind the `mzvkit` command.

pub mod dsl;
pub mod eval;

pub use dsl::{parse_expression, DslError, Expr, Ty};
pub use eval::{EvalError, Evaluator, Value};
