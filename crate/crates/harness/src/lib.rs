//! Instance generation, the pair-count benchmark, the oracle verifier and
//! the serialized forms used by the `mostpoints` CLI.

pub mod bench;
pub mod error;
pub mod gen;
pub mod report;
pub mod verify;

pub use bench::{bench, parse_configs, parse_seeds, BenchConfig, BenchRecord};
pub use error::{HarnessError, Result};
pub use gen::{generate, Instance, InstanceMeta};
pub use report::SolutionReport;
pub use verify::{verify, VerifyReport};
