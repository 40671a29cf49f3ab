//! Command implementations behind the `monadal` binary: input loading, the named pipelines
//! with their dumps, the verify-all acceptance suite, and an independent classical oracle.

pub mod oracle;
pub mod pipelines;
pub mod verify;
