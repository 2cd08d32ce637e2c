//! Library side of the `divcent` command-line tool: experiment runners,
//! report types and SVG charts. The binary in `main.rs` is a thin clap front
//! end over these.

pub mod commands;
pub mod error;
pub mod experiments;
pub mod svg;

pub use error::CliError;

/// Version of the JSON report layout.
pub const REPORT_SCHEMA_VERSION: u32 = 1;
