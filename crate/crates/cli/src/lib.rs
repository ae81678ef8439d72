//! Command-line front end: ring and matrix files in, JSON dossiers out, plus a
//! catalog of surfaces with known F-blowups.

pub mod catalog;
pub mod commands;
pub mod dossier;
pub mod error;
pub mod spec;

pub use dossier::Dossier;
pub use error::CliError;
pub use spec::RingSpec;
