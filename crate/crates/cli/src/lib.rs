//! Report runner and argument helpers behind the `glattice` binary.

pub mod manifest;
pub mod report;

pub use manifest::{Claim, Expected, Manifest};
pub use report::{run_report, run_report_with, Report, ReportConfig, ReportRow, Status};
