//! Command-line front end for `topk-info`: list files in, CSV or JSON out.
//!
//! List files are UTF-8 text with one label per line; a label's rank is its
//! line number once blank lines are dropped.

pub mod args;
pub mod commands;
pub mod error;
pub mod output;

pub use args::Cli;
pub use commands::run;
pub use error::CliError;
