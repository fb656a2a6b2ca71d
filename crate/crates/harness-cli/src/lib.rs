//! Harness library behind the `wasync` binary: seeded instance generators,
//! the campaign registry and report types, plus acceptor-file I/O for the
//! intersection tooling.

pub mod acceptor_files;
pub mod campaign;
pub mod gen;
pub mod report;
