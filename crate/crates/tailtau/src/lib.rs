//! IO and orchestration companion to `tailtau-core`: the simulation
//! experiments, the river-network pairwise pipeline, delimited-text output,
//! reproducible run metadata, and the command-line interface.

pub mod cli;
pub mod config;
mod error;
pub mod experiments;
pub mod hydro;
pub mod meta;
pub mod summary;
pub mod table;

pub use error::{Error, Result};
