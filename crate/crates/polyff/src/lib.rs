//! Command-line driver and file formats for `polyff-core`.
//!
//! The core crate does the algebra; this crate turns its values into JSON
//! reports, CSV scan tables and dart-permutation text files, and runs
//! parameter scans across a worker pool.

pub mod cli;
pub mod darts;
pub mod error;
pub mod pipeline;
pub mod report;
pub mod scan;

pub use error::CliError;
