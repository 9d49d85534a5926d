//! Interchange documents, reports and the `modcoalg` command line.

pub mod commands;
pub mod error;
pub mod interchange;
pub mod report;

pub use commands::{run, Outcome};
pub use error::{CliError, DocError};
