//! File formats, the bundled group catalog and simple-group data, report
//! emission and the command implementations behind the `indgen` binary.

pub mod catalog;
pub mod commands;
pub mod deadline;
pub mod error;
pub mod grpfile;
pub mod report;
pub mod simple_groups;

pub use error::{CliError, Status};
