//! Output-sensitive exact solver.
//!
//! Starting from the best single disk, each round `i` compares two ways of
//! getting `i` disks from the optimal `i - 1`:
//!
//! * keep them and add the best disk on the points they leave uncovered;
//! * re-solve exactly for `i` disks, but only over the points within distance
//!   3 of the current centers.
//!
//! Any disk of an optimal `i`-set that shares a covered point with the
//! incumbent lies entirely inside that neighborhood. If some disk shares
//! none, the greedy extension is at least as good. The better branch is
//! therefore optimal, and the exact search only ever sees `O(iρ)` points.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{most_points_excluding, most_points_with, ExactOptions};
use crate::geom::{coverage_of_disks, CoverageSet, Point, UnitDisk, EPS_COVER};
use crate::max_disk::best_disk_grid;

/// Radius of the region around a disk center that contains every unit disk
/// sharing a point with it.
pub const NEIGHBORHOOD_RADIUS: f64 = 3.0;

/// How many unit disks suffice to cover one neighborhood; bounds the points
/// in it by this multiple of ρ.
pub const NEIGHBORHOOD_PACKING: usize = 21;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IterationTrace {
    pub i: usize,
    /// Cover of the incumbent plus the greedy disk.
    pub greedy_gain: usize,
    /// Points within distance 3 of an incumbent center.
    pub neighborhood_size: usize,
    /// Cover, over the full instance, of the neighborhood re-solve.
    pub exact_value: usize,
    pub chose_greedy: bool,
    pub combos_evaluated: u64,
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub disks: Vec<UnitDisk>,
    pub covered: CoverageSet,
    /// Best single-disk cover of the instance.
    pub rho: usize,
    pub traces: Vec<IterationTrace>,
    /// Sum of `combos_evaluated` over the neighborhood re-solves.
    pub total_combos: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub exact: ExactOptions,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            exact: ExactOptions {
                dedup: true,
                prune: false,
            },
        }
    }
}

/// Points within distance 3 of at least one disk center; ids are kept.
pub fn neighbor_points(pts: &[Point], disks: &[UnitDisk]) -> Vec<Point> {
    let r2 = NEIGHBORHOOD_RADIUS * NEIGHBORHOOD_RADIUS * (1.0 + EPS_COVER);
    pts.iter()
        .filter(|p| disks.iter().any(|d| d.center_dist2(p) <= r2))
        .copied()
        .collect()
}

pub fn solve(pts: &[Point], m: usize) -> Result<Solution> {
    solve_with(pts, m, SolveOptions::default())
}

pub fn solve_with(pts: &[Point], m: usize, opts: SolveOptions) -> Result<Solution> {
    if m == 0 {
        return Err(Error::InvalidDiskCount(m));
    }
    let first = best_disk_grid(pts)?;
    let rho = first.rho_witness;
    let mut disks = vec![first.disk];
    let mut covered = first.covered;
    let mut traces = Vec::with_capacity(m.saturating_sub(1));

    for i in 2..=m {
        let g = most_points_excluding(pts, 1, &covered)?;
        let mut greedy_disks = disks.clone();
        greedy_disks.push(g.disks[0]);
        let mut greedy_cover = covered.clone();
        greedy_cover.union_with(&g.covered);

        let hood = neighbor_points(pts, &disks);
        let local = most_points_with(&hood, i, opts.exact)?;
        let exact_cover = coverage_of_disks(&local.disks, pts);

        let chose_greedy = greedy_cover.count() > exact_cover.count();
        traces.push(IterationTrace {
            i,
            greedy_gain: greedy_cover.count(),
            neighborhood_size: hood.len(),
            exact_value: exact_cover.count(),
            chose_greedy,
            combos_evaluated: local.stats.combos_evaluated,
        });
        if chose_greedy {
            disks = greedy_disks;
            covered = greedy_cover;
        } else {
            disks = local.disks;
            covered = exact_cover;
        }
    }

    let total_combos = traces.iter().map(|t| t.combos_evaluated).sum();
    Ok(Solution {
        disks,
        covered,
        rho,
        traces,
        total_combos,
    })
}

/// Plain greedy: best disk, then repeatedly the best disk on what is left.
#[derive(Clone, Debug)]
pub struct GreedyResult {
    pub disks: Vec<UnitDisk>,
    pub covered: CoverageSet,
}

pub fn greedy_cover(pts: &[Point], m: usize) -> Result<GreedyResult> {
    if m == 0 {
        return Err(Error::InvalidDiskCount(m));
    }
    let first = best_disk_grid(pts)?;
    let mut disks = vec![first.disk];
    let mut covered = first.covered;
    for _ in 1..m {
        let g = most_points_excluding(pts, 1, &covered)?;
        disks.push(g.disks[0]);
        covered.union_with(&g.covered);
    }
    Ok(GreedyResult { disks, covered })
}
