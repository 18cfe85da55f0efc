//! Command-line harness: argument parsing, JSON reports, text traces and
//! CSV sweeps on top of `hotelmc-core`.

pub mod args;
pub mod error;
pub mod report;
pub mod run;
pub mod text;

pub use args::Cli;
pub use error::{CliError, ReportError};
pub use report::Report;
pub use run::{execute, exit_code, RunSpec, SWEEP_COLUMNS};
