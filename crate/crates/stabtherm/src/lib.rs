//! File formats, symmetry-resolved exact diagonalization, level statistics,
//! batch suites and the `stabtherm` command line on top of
//! [`stabtherm_core`].

pub mod cli;
pub mod error;
pub mod io;
pub mod json;
pub mod rdm;
pub mod spectral;
pub mod suites;

pub use error::{Error, Result};
