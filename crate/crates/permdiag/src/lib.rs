//! Front end for `permdiag-core`: JSON and ASCII renderings, a parallel
//! identity verifier, and the `permdiag` command line.

pub mod cli;
pub mod format;
pub mod report;

pub use cli::run;
