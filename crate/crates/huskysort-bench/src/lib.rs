//! Benchmark harness for husky-coded sorting: corpus ingestion, typed input
//! generators, instrumented trials with per-run validation, and CSV/markdown
//! report emission. The `huskysort` binary in this crate is the command-line
//! face of it all; the library form exists so integration tests (and other
//! tools) can drive the same machinery directly.

pub mod bench;
pub mod coders;
pub mod config;
pub mod corpus;
pub mod gen;
pub mod report;
pub mod runner;
