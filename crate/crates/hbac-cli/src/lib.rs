//! Command-line surface for the cooling-refrigerator toolkit: simulate,
//! sweep, optimize-theta, audit and analyze, with deterministic CSV/JSON
//! emission and gnuplot script generation.

pub mod args;
pub mod exec;
pub mod output;

pub use args::{parse_args, Cli, Command};
pub use exec::{execute, ExecError};
