//! Library side of the `qbell` binary: DM4 state files, CSV/report output
//! and command dispatch. Split from `main` so integration tests can drive
//! the pieces directly.

pub mod commands;
pub mod output;
pub mod statefile;
