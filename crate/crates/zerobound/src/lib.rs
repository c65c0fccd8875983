//! File formats and the command-line front end for `zerobound-core`.

pub mod cli;
pub mod doc;
pub mod error;
pub mod table;
pub mod zerofile;

pub use error::{Error, Result};
