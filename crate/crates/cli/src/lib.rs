//! File formats, trace serialization and the benchmark harness behind the
//! `maxbisect` command-line tool.

pub mod bench;
pub mod format;
pub mod trace;
