//! Command-line surface for `ksub-core`: instance files, seeded generation,
//! solving, validation, randomized checks and batch benchmarks.

pub mod bench;
pub mod commands;
pub mod error;
pub mod io;
pub mod report;

pub use commands::run;
pub use error::{exit, CliError, Result};
pub use io::{instance_json, parse_instance, read_instance, InstanceFile, Problem};
