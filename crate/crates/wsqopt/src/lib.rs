//! File formats, experiment recipes and the `wsqopt` command line on top of
//! [`wsqopt_core`].

pub mod cli;
pub mod error;
pub mod experiments;
pub mod formats;
pub mod solve;

pub use error::{CliError, CliResult};
