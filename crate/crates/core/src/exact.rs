//! Exact best-`k` disks by enumerating `k`-combinations of candidate disks.
//!
//! Every candidate's coverage is precomputed as a bitset over the local point
//! order; a combination is scored by the popcount of the OR of its members.
//! With `k = 2` the number of scored combinations is the number of disk pairs
//! the solver processed.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{candidate_disks, coverage_of_disks, covers, CoverageSet, Point, UnitDisk};
use crate::max_disk::best_disk_sweep;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExactOptions {
    /// Collapse candidates with identical coverage before enumerating.
    pub dedup: bool,
    /// Branch and bound over candidates sorted by coverage, descending.
    pub prune: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ExactSolveStats {
    pub combos_evaluated: u64,
    pub candidates_generated: usize,
    pub candidates_after_dedup: usize,
}

#[derive(Clone, Debug)]
pub struct MultiDiskResult {
    /// Exactly `k` disks; repeats pad the list when fewer are useful.
    pub disks: Vec<UnitDisk>,
    pub covered: CoverageSet,
    pub stats: ExactSolveStats,
}

/// Best `k` disks over `pts` with faithful enumeration (no pruning).
pub fn most_points(pts: &[Point], k: usize, dedup: bool) -> Result<MultiDiskResult> {
    most_points_with(
        pts,
        k,
        ExactOptions {
            dedup,
            prune: false,
        },
    )
}

pub fn most_points_with(pts: &[Point], k: usize, opts: ExactOptions) -> Result<MultiDiskResult> {
    if k == 0 {
        return Err(Error::InvalidDiskCount(k));
    }
    if pts.is_empty() {
        return Err(Error::EmptyInput);
    }
    if k == 1 {
        let r = best_disk_sweep(pts)?;
        let examined = r.placements;
        return Ok(MultiDiskResult {
            disks: vec![r.disk],
            covered: r.covered,
            stats: ExactSolveStats {
                combos_evaluated: examined as u64,
                candidates_generated: examined,
                candidates_after_dedup: examined,
            },
        });
    }

    let cands = candidate_disks(pts);
    let candidates_generated = cands.len();
    let words = pts.len().div_ceil(64);
    let mut table = CoverTable::build(&cands, pts, words);
    if opts.dedup {
        table.dedup();
    }
    let mut stats = ExactSolveStats {
        combos_evaluated: 0,
        candidates_generated,
        candidates_after_dedup: table.len(),
    };

    let chosen: Vec<usize> = if table.len() <= k {
        // every candidate fits; the leftover slots repeat the best one
        stats.combos_evaluated = 1;
        let mut all: Vec<usize> = (0..table.len()).collect();
        let top = table.best_single();
        all.resize(k, top);
        all
    } else {
        if opts.prune {
            table.sort_by_count_desc();
        }
        let mut search = Search::new(&table, k, opts.prune);
        search.run();
        stats.combos_evaluated = search.combos;
        search.best_idx
    };

    let disks: Vec<UnitDisk> = chosen.iter().map(|&i| table.disks[i]).collect();
    let covered = coverage_of_disks(&disks, pts);
    Ok(MultiDiskResult {
        disks,
        covered,
        stats,
    })
}

/// [`most_points`] on the points whose ids are not in `excluded`, with
/// default options. Coverage stays in the caller's id space.
pub fn most_points_excluding(
    pts: &[Point],
    k: usize,
    excluded: &CoverageSet,
) -> Result<MultiDiskResult> {
    most_points_excluding_with(pts, k, excluded, ExactOptions::default())
}

pub fn most_points_excluding_with(
    pts: &[Point],
    k: usize,
    excluded: &CoverageSet,
    opts: ExactOptions,
) -> Result<MultiDiskResult> {
    if k == 0 {
        return Err(Error::InvalidDiskCount(k));
    }
    let first = pts.first().ok_or(Error::EmptyInput)?;
    let rest: Vec<Point> = pts
        .iter()
        .filter(|p| !excluded.contains(p.id))
        .copied()
        .collect();
    if rest.is_empty() {
        return Ok(MultiDiskResult {
            disks: vec![UnitDisk::centered_at(first); k],
            covered: CoverageSet::new(),
            stats: ExactSolveStats::default(),
        });
    }
    most_points_with(&rest, k, opts)
}

/// Candidate disks with their coverage bitsets in one flat buffer.
struct CoverTable {
    disks: Vec<UnitDisk>,
    bits: Vec<u64>,
    counts: Vec<u32>,
    words: usize,
}

impl CoverTable {
    fn build(cands: &[UnitDisk], pts: &[Point], words: usize) -> Self {
        let mut bits = vec![0u64; cands.len() * words];
        let mut counts = Vec::with_capacity(cands.len());
        for (ci, d) in cands.iter().enumerate() {
            let row = &mut bits[ci * words..(ci + 1) * words];
            let mut c = 0;
            for (pi, p) in pts.iter().enumerate() {
                if covers(d, p) {
                    row[pi / 64] |= 1 << (pi % 64);
                    c += 1;
                }
            }
            counts.push(c);
        }
        CoverTable {
            disks: cands.to_vec(),
            bits,
            counts,
            words,
        }
    }

    fn len(&self) -> usize {
        self.disks.len()
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    /// Keeps the first candidate (smallest center) of each distinct coverage.
    fn dedup(&mut self) {
        let mut seen: HashSet<&[u64]> = HashSet::new();
        let keep: Vec<usize> = (0..self.len())
            .filter(|&i| seen.insert(self.row(i)))
            .collect();
        self.select(&keep);
    }

    fn sort_by_count_desc(&mut self) {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.counts[b].cmp(&self.counts[a]));
        self.select(&order);
    }

    fn select(&mut self, order: &[usize]) {
        let mut bits = Vec::with_capacity(order.len() * self.words);
        for &i in order {
            bits.extend_from_slice(self.row(i));
        }
        self.disks = order.iter().map(|&i| self.disks[i]).collect();
        self.counts = order.iter().map(|&i| self.counts[i]).collect();
        self.bits = bits;
    }

    fn best_single(&self) -> usize {
        let mut best = 0;
        for i in 1..self.len() {
            if self.counts[i] > self.counts[best] {
                best = i;
            }
        }
        best
    }
}

/// Depth-first enumeration of increasing index tuples.
struct Search<'a> {
    table: &'a CoverTable,
    k: usize,
    prune: bool,
    /// `k - 1` partial unions, one per level.
    stack: Vec<u64>,
    cur: Vec<usize>,
    best_count: u32,
    best_idx: Vec<usize>,
    combos: u64,
}

impl<'a> Search<'a> {
    fn new(table: &'a CoverTable, k: usize, prune: bool) -> Self {
        Search {
            table,
            k,
            prune,
            stack: vec![0; k * table.words],
            cur: Vec::with_capacity(k),
            best_count: 0,
            best_idx: Vec::new(),
            combos: 0,
        }
    }

    fn run(&mut self) {
        self.level(0, 0);
    }

    fn level(&mut self, depth: usize, start: usize) {
        let w = self.table.words;
        let n = self.table.len();
        let remaining = self.k - depth;
        let partial_count: u32 = if depth == 0 {
            0
        } else {
            self.stack[(depth - 1) * w..depth * w]
                .iter()
                .map(|x| x.count_ones())
                .sum()
        };

        if remaining == 1 {
            for j in start..n {
                if self.prune
                    && !self.best_idx.is_empty()
                    && partial_count + self.table.counts[j] <= self.best_count
                {
                    break;
                }
                let row = self.table.row(j);
                let cnt: u32 = if depth == 0 {
                    row.iter().map(|x| x.count_ones()).sum()
                } else {
                    let partial = &self.stack[(depth - 1) * w..depth * w];
                    partial
                        .iter()
                        .zip(row)
                        .map(|(a, b)| (a | b).count_ones())
                        .sum()
                };
                self.combos += 1;
                if cnt > self.best_count || self.best_idx.is_empty() {
                    self.best_count = cnt;
                    self.best_idx.clear();
                    self.best_idx.extend_from_slice(&self.cur);
                    self.best_idx.push(j);
                }
            }
            return;
        }

        for j in start..=(n - remaining) {
            if self.prune {
                let bound: u32 =
                    partial_count + self.table.counts[j..j + remaining].iter().sum::<u32>();
                if bound <= self.best_count && !self.best_idx.is_empty() {
                    break;
                }
            }
            {
                let (before, after) = self.stack.split_at_mut(depth * w);
                let dst = &mut after[..w];
                let row = self.table.row(j);
                if depth == 0 {
                    dst.copy_from_slice(row);
                } else {
                    let partial = &before[(depth - 1) * w..];
                    for ((d, a), b) in dst.iter_mut().zip(partial).zip(row) {
                        *d = a | b;
                    }
                }
            }
            self.cur.push(j);
            self.level(depth + 1, j + 1);
            self.cur.pop();
        }
    }
}
