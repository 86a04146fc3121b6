//! File formats and the `braidrep` command-line tool.

pub mod app;
pub mod error;
pub mod format;
pub mod svg;
