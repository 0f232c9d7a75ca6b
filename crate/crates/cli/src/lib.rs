//! Command-line front end for `ybgate-core`: matrix documents, sweep
//! reports and the `ybgate` subcommands.

pub mod args;
pub mod commands;
pub mod document;
mod error;
pub mod report;

pub use commands::{run, Outcome};
pub use document::MatrixDocument;
pub use error::CliError;
pub use report::SweepReport;
