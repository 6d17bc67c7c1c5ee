//! Command-line front end for the `equalpow` library.
//!
//! Exit codes: 0 found, 1 error, 2 nothing found (or invalid identity),
//! 3 trivial identity, 4 failed self-check.

pub mod args;
pub mod bench;
pub mod commands;
pub mod error;
pub mod record;

pub use args::{Cli, Command, Format};
pub use commands::run;
pub use error::{CliError, Status};
