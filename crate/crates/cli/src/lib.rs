//! Command-line front end for `chordcount-core`: series generation with
//! cross-method checks, OEIS b-files, CSV/JSON export, spectrum and bounds
//! reports, and cyclic schedule rendering.

pub mod args;
pub mod bfile;
pub mod commands;
pub mod reference;
pub mod report;
pub mod schedule;

pub use commands::{run, CmdOutput, ExitCode};
