//! Command-line front end: JSON documents for orbifolds and actions, and
//! the `orbifold` subcommands.

pub mod commands;
pub mod document;
pub mod error;

pub use commands::{run, Cli};
pub use error::CliError;
