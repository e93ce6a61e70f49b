//! JSON formats and the `cslab` command-line front end.

pub mod cli;
pub mod error;
pub mod json;
pub mod report;

pub use cli::{execute, resolve_caps, run, Caps, Cli, Command, Outcome};
pub use error::{CliError, CliResult};
