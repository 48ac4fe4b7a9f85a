//! Command-line front end for `anharmonic-core`: TOML configuration,
//! temperature sweeps, and CSV/JSON reports pairing each literal formula
//! with its oracle.
//!
//! The runners only compute; [`output`] turns rows into files. Grid points
//! are evaluated on a rayon pool and collected in input order, so the output
//! does not depend on the thread count.

pub mod config;
pub mod output;
pub mod run;

pub use config::RunConfig;
pub use output::Row;

/// Environment variable overriding the worker-thread count.
pub const THREADS_ENV: &str = "ANHARMONIC_THREADS";
