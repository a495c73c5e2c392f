//! File formats, batch verification and the command-line front end for
//! `hereditary-core`.

pub mod cli;
pub mod harness;
pub mod io;
pub mod report;
