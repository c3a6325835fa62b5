//! Workspace parsing, report formatting and subcommand drivers for the `fdk0` binary.

pub mod commands;
mod error;
pub mod input;
pub mod machine;

pub use error::{exit, CliError};
