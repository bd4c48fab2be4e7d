//! File formats, reports and command implementations around
//! `timegraph-core`. The `timegraph` binary is a thin clap front end over
//! [`commands`].

pub mod commands;
mod error;
pub mod format;
pub mod report;

pub use error::{CliError, ExitCode};
