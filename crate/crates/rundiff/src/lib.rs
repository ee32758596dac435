//! Runtime-diff engine: file formats, reports and the `rundiff` command.
//!
//! The analysis itself lives in [`rundiff_core`]. This crate adds what needs
//! an operating system:
//!
//! - [`wire`]: the JSON trace format collectors write;
//! - [`output`]: the textual reports;
//! - [`pipeline`]: reading inputs and running one comparison;
//! - [`collector`]: breakpoint manifests and collector processes;
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod collector;
pub mod output;
pub mod pipeline;
pub mod wire;

pub use rundiff_core;
pub use wire::{parse_trace, parse_trace_value, serialize_trace, ParsedTrace, TraceError};
