//! Shared pieces of the harmdisk CLI: literal parsing, output formatting,
//! and the named verification suites.

pub mod io;
pub mod verify;
