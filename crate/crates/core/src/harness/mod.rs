//! Config-driven sweeps, line-delimited result records, knot-pair reports
//! and the command line.

pub mod cli;
mod config;
mod records;
mod report;
mod sweep;

pub use config::{KnotFamily, SweepConfig, Task};
pub use records::{append_records, read_records, BucketDigest, RecordValue, ResultRecord, ENGINE_VERSION};
pub use report::{compare_report, Report, ReportRow, RowStatus, EXIT_CLEAN, EXIT_MISMATCH, EXIT_SKIP, EXIT_USAGE, PAIRS};
pub use sweep::{representation_table, run_cell, run_sweep};
