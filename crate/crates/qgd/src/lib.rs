//! Std companion to `qgd-core`: JSON configs, CSV and SVG output, a threaded
//! sweep runner, self-check suites and the `qgd` command line.

pub mod commands;
pub mod config;
pub mod output;
pub mod svg;
pub mod sweep;
pub mod verify;

pub use config::RunConfig;
