//! Report assembly for the `solvagraph` command-line tool.

pub mod report;

pub use report::{analyze, AnalysisReport, AnalyzeOptions};
