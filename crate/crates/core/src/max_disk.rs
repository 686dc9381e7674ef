//! Best single unit disk.
//!
//! [`best_disk_sweep`] is the classic max-depth formulation: for every point
//! `p`, the centers of unit disks having `p` on their boundary form a unit
//! circle around `p`, and each neighbor `q` within distance 2 is covered on a
//! closed arc of that circle. Sweeping the arc endpoints gives the deepest
//! placement. [`best_disk_grid`] runs the same sweep inside the cells of four
//! 4×4 grids shifted by 2 in each axis; every unit disk fits inside a single
//! cell of one of them, so the per-cell optima contain the global one while
//! each sweep only sees points of its own cell.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::geom::{
    coverage, through_pair_centers, CoverageSet, Point, UnitDisk, EPS_COVER, EPS_DIAMETER,
};

#[derive(Clone, Debug)]
pub struct SingleDiskResult {
    pub disk: UnitDisk,
    pub covered: CoverageSet,
    /// `covered.count()`; for a full point set this is ρ.
    pub rho_witness: usize,
    /// Disk placements the sweep scored (arc starts plus one per point).
    pub placements: usize,
}

/// Layout of the four shifted grids.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub cell_size: f64,
    pub shifts: [(f64, f64); 4],
}

pub const GRID: GridSpec = GridSpec {
    cell_size: 4.0,
    shifts: [(0.0, 0.0), (0.0, 2.0), (2.0, 0.0), (2.0, 2.0)],
};

/// Slack when assigning points to closed cells, so that points accepted by
/// [`crate::covers`] just outside a wall still reach the cell.
const CELL_MARGIN: f64 = 1e-9;

pub type CellKey = (i64, i64);

impl GridSpec {
    /// Range of cell indices along one axis whose closed extent contains
    /// `local`, a coordinate already measured from the grid's origin.
    fn axis_cells(&self, local: f64) -> std::ops::RangeInclusive<i64> {
        let s = self.cell_size;
        let lo = ((local - s - CELL_MARGIN) / s).ceil() as i64;
        let hi = ((local + CELL_MARGIN) / s).floor() as i64;
        lo..=hi
    }

    /// All closed cells of grid `shift` that contain `(x, y)`, where
    /// coordinates are relative to `origin` (the bounding-box minimum).
    pub fn cells_of(&self, shift: usize, origin: (f64, f64), x: f64, y: f64) -> Vec<CellKey> {
        let (sx, sy) = self.shifts[shift];
        let xs = self.axis_cells(x - origin.0 - sx);
        let ys = self.axis_cells(y - origin.1 - sy);
        let mut out = Vec::with_capacity(4);
        for kx in xs {
            for ky in ys.clone() {
                out.push((kx, ky));
            }
        }
        out
    }

    /// `(xmin, ymin, xmax, ymax)` of a cell in absolute coordinates.
    pub fn cell_bounds(
        &self,
        shift: usize,
        origin: (f64, f64),
        key: CellKey,
    ) -> (f64, f64, f64, f64) {
        let (sx, sy) = self.shifts[shift];
        let s = self.cell_size;
        let x0 = origin.0 + sx + key.0 as f64 * s;
        let y0 = origin.1 + sy + key.1 as f64 * s;
        (x0, y0, x0 + s, y0 + s)
    }
}

/// Deepest placement found so far: depth, then smallest center.
#[derive(Clone, Copy, Debug)]
struct Best {
    depth: usize,
    disk: UnitDisk,
}

impl Best {
    fn offer(slot: &mut Option<Best>, depth: usize, disk: UnitDisk) {
        let better = match slot {
            None => true,
            Some(b) => {
                depth > b.depth || (depth == b.depth && disk.center_cmp(&b.disk) == Ordering::Less)
            }
        };
        if better {
            *slot = Some(Best { depth, disk });
        }
    }
}

fn normalize_angle(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Max-depth sweep over `pts`. Returns the best placement (depth counted over
/// `pts` only) and the number of placements scored.
fn sweep(pts: &[Point]) -> (Option<Best>, usize) {
    let reach2 = (2.0 + EPS_DIAMETER) * (2.0 + EPS_DIAMETER);
    let mut best: Option<Best> = None;
    let mut placements = 0usize;
    // (angle, is_end, neighbor index); starts sort before ends at equal angle
    let mut events: Vec<(f64, bool, usize)> = Vec::new();

    for p in pts {
        events.clear();
        let mut depth = 1usize;
        for (qi, q) in pts.iter().enumerate() {
            if std::ptr::eq(p, q) {
                continue;
            }
            let d2 = p.dist2(q);
            if d2 > reach2 {
                continue;
            }
            if d2 <= EPS_COVER * EPS_COVER {
                // coincident points are covered from every placement on the circle
                depth += 1;
                continue;
            }
            let d = d2.sqrt();
            let half = (d / 2.0).min(1.0).acos();
            let dir = (q.y - p.y).atan2(q.x - p.x);
            let start = normalize_angle(dir - half);
            let end = normalize_angle(dir + half);
            if start > end {
                depth += 1;
            }
            events.push((start, false, qi));
            events.push((end, true, qi));
        }

        placements += 1;
        if events.is_empty() {
            Best::offer(&mut best, depth, UnitDisk::centered_at(p));
            continue;
        }

        events.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        for &(_, is_end, qi) in &events {
            if is_end {
                depth -= 1;
                continue;
            }
            depth += 1;
            placements += 1;
            if best.is_none_or(|b| depth >= b.depth) {
                if let Some([cw, _]) = through_pair_centers(p, &pts[qi]) {
                    Best::offer(&mut best, depth, cw);
                }
            }
        }
    }
    (best, placements)
}

fn finish(pts: &[Point], best: Best, placements: usize) -> SingleDiskResult {
    let covered = coverage(&best.disk, pts);
    SingleDiskResult {
        disk: best.disk,
        rho_witness: covered.count(),
        covered,
        placements,
    }
}

/// Best single disk by angular sweep around every point. O(n² log n).
pub fn best_disk_sweep(pts: &[Point]) -> Result<SingleDiskResult> {
    let (best, placements) = sweep(pts);
    let best = best.ok_or(Error::EmptyInput)?;
    Ok(finish(pts, best, placements))
}

/// Work done by [`best_disk_grid`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GridWork {
    /// Non-empty cells over all four grids.
    pub cells: usize,
    /// Sum over non-empty cells of (points in cell)².
    pub sum_sq_cell_points: usize,
    /// Sum over non-empty cells of points in cell (about 4n).
    pub sum_cell_points: usize,
}

/// Best single disk via the four shifted grids.
pub fn best_disk_grid(pts: &[Point]) -> Result<SingleDiskResult> {
    best_disk_grid_with_work(pts).map(|(r, _)| r)
}

pub fn best_disk_grid_with_work(pts: &[Point]) -> Result<(SingleDiskResult, GridWork)> {
    if pts.is_empty() {
        return Err(Error::EmptyInput);
    }
    let origin = pts
        .iter()
        .fold((f64::INFINITY, f64::INFINITY), |(x, y), p| {
            (x.min(p.x), y.min(p.y))
        });

    let mut best: Option<Best> = None;
    let mut placements = 0;
    let mut work = GridWork::default();
    for shift in 0..GRID.shifts.len() {
        let mut cells: BTreeMap<CellKey, Vec<Point>> = BTreeMap::new();
        for p in pts {
            for key in GRID.cells_of(shift, origin, p.x, p.y) {
                cells.entry(key).or_default().push(*p);
            }
        }
        for cell_pts in cells.values() {
            work.cells += 1;
            work.sum_cell_points += cell_pts.len();
            work.sum_sq_cell_points += cell_pts.len() * cell_pts.len();
            let (cell_best, n) = sweep(cell_pts);
            placements += n;
            if let Some(b) = cell_best {
                Best::offer(&mut best, b.depth, b.disk);
            }
        }
    }
    let best = best.ok_or(Error::EmptyInput)?;
    Ok((finish(pts, best, placements), work))
}
