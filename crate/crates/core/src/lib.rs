//! Exact solvers for placing `m` unit disks so that they cover as many of a
//! set of planar points as possible.
//!
//! * [`geom`]: points, disks, coverage sets and candidate disks.
//! * [`max_disk`]: the best single disk, by angular sweep and by a
//!   four-shifted-grid decomposition.
//! * [`exact`]: best `k` disks by enumerating candidate combinations.
//! * [`greedy`]: the output-sensitive solver, which only re-solves exactly
//!   inside the radius-3 neighborhood of the incumbent disks.

pub mod error;
pub mod exact;
pub mod geom;
pub mod greedy;
pub mod max_disk;

pub use error::{Error, Result};
pub use exact::{
    most_points, most_points_excluding, most_points_with, ExactOptions, ExactSolveStats,
    MultiDiskResult,
};
pub use geom::{candidate_disks, coverage, covers, CoverageSet, Point, UnitDisk};
pub use greedy::{greedy_cover, neighbor_points, solve, IterationTrace, Solution};
pub use max_disk::{best_disk_grid, best_disk_sweep, SingleDiskResult};
