//! JSON and CSV encodings of the `hypsurf-core` types and the `hypsurf`
//! command-line tool.

pub mod aut;
pub mod cli;
pub mod error;
pub mod formats;

pub use cli::{run, run_with_io, CliConfig, OutputFormat};
pub use error::CliError;
