//! Instance files, weight rendering and the `posp` commands.

pub mod commands;
pub mod document;
pub mod render;

pub use commands::{run, Cli, CliError, Output};
