//! Command-line front end for `horokit-core`: argument parsing, output
//! formats and the verification suites.

pub mod commands;
pub mod output;
pub mod parse;
pub mod verify;

pub use commands::{exit, CliError, Outcome};
pub use output::{Format, Table};
