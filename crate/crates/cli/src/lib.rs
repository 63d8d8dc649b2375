//! Trace ingestion, file formats and command plumbing for the CAIS
//! resilience monitor.
//!
//! The library half of the `cais-resilience` binary: line-delimited trace
//! parsing, timeline CSV, report JSON, SVG plotting and the end-to-end
//! simulate/monitor runners.

pub mod config;
pub mod plot;
pub mod report_file;
pub mod run;
pub mod timeline;
pub mod trace;
