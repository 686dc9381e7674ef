//! Points, unit disks, coverage sets and the candidate-disk construction
//! shared by every solver.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Slack on squared distance for closed-disk membership. Candidate disks put
/// input points exactly on the boundary, so membership has to tolerate the
/// rounding of that construction.
pub const EPS_COVER: f64 = 1e-9;

/// Two pair distances within this of 2 are treated as exactly 2 and yield a
/// single circumscribing disk.
pub const EPS_DIAMETER: f64 = 1e-12;

/// Centers closer than this (per coordinate) are the same candidate.
pub const EPS_CENTER: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
    /// Position of the point in the input order.
    pub id: usize,
}

impl Point {
    pub fn new(id: usize, x: f64, y: f64) -> Self {
        Point { x, y, id }
    }

    pub fn dist2(&self, other: &Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// Builds a point list from raw coordinates, assigning ids by position.
pub fn points_from_coords(coords: &[(f64, f64)]) -> Vec<Point> {
    coords
        .iter()
        .enumerate()
        .map(|(id, &(x, y))| Point::new(id, x, y))
        .collect()
}

/// A closed disk of radius 1.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitDisk {
    pub cx: f64,
    pub cy: f64,
}

impl UnitDisk {
    pub fn new(cx: f64, cy: f64) -> Self {
        UnitDisk { cx, cy }
    }

    pub fn centered_at(p: &Point) -> Self {
        UnitDisk { cx: p.x, cy: p.y }
    }

    pub fn center_dist2(&self, p: &Point) -> f64 {
        let dx = p.x - self.cx;
        let dy = p.y - self.cy;
        dx * dx + dy * dy
    }

    /// Lexicographic order on `(cx, cy)`; the tie-break used by all solvers.
    pub fn center_cmp(&self, other: &UnitDisk) -> Ordering {
        self.cx
            .total_cmp(&other.cx)
            .then_with(|| self.cy.total_cmp(&other.cy))
    }

    fn same_center(&self, other: &UnitDisk) -> bool {
        (self.cx - other.cx).abs() <= EPS_CENTER && (self.cy - other.cy).abs() <= EPS_CENTER
    }
}

/// Compares two disk lists as sorted center sequences.
pub fn center_list_cmp(a: &[UnitDisk], b: &[UnitDisk]) -> Ordering {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(UnitDisk::center_cmp);
    b.sort_by(UnitDisk::center_cmp);
    for (x, y) in a.iter().zip(&b) {
        match x.center_cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// Closed unit-disk membership with [`EPS_COVER`] slack.
pub fn covers(d: &UnitDisk, p: &Point) -> bool {
    d.center_dist2(p) <= 1.0 + EPS_COVER
}

/// A set of point ids, stored as a dense bitset with a cached cardinality.
///
/// Sets built over different universe sizes combine freely; the shorter one is
/// treated as zero-extended.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct CoverageSet {
    words: Vec<u64>,
    count: usize,
}

impl CoverageSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Empty set able to hold ids `0..universe` without reallocating.
    pub fn with_universe(universe: usize) -> Self {
        CoverageSet {
            words: vec![0; universe.div_ceil(64)],
            count: 0,
        }
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> Self {
        let mut s = CoverageSet::new();
        for id in ids {
            s.insert(id);
        }
        s
    }

    /// Returns true if `id` was newly inserted.
    pub fn insert(&mut self, id: usize) -> bool {
        let (w, b) = (id / 64, id % 64);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let mask = 1u64 << b;
        if self.words[w] & mask != 0 {
            return false;
        }
        self.words[w] |= mask;
        self.count += 1;
        true
    }

    pub fn contains(&self, id: usize) -> bool {
        self.words
            .get(id / 64)
            .is_some_and(|w| w & (1u64 << (id % 64)) != 0)
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn union_with(&mut self, other: &CoverageSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        self.recount();
    }

    pub fn difference_with(&mut self, other: &CoverageSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        self.recount();
    }

    /// `|self ∪ other|` without allocating.
    pub fn union_count(&self, other: &CoverageSet) -> usize {
        let (long, short) = if self.words.len() >= other.words.len() {
            (&self.words, &other.words)
        } else {
            (&other.words, &self.words)
        };
        let shared: usize = long
            .iter()
            .zip(short)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum();
        let tail: usize = long[short.len()..]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum();
        shared + tail
    }

    pub fn is_subset(&self, other: &CoverageSet) -> bool {
        self.words.iter().enumerate().all(|(i, &w)| {
            let o = other.words.get(i).copied().unwrap_or(0);
            w & !o == 0
        })
    }

    fn recount(&mut self) {
        self.count = self.words.iter().map(|w| w.count_ones() as usize).sum();
    }
}

impl fmt::Debug for CoverageSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for CoverageSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        CoverageSet::from_ids(iter)
    }
}

/// Ids of the points of `pts` inside `d`.
pub fn coverage(d: &UnitDisk, pts: &[Point]) -> CoverageSet {
    let universe = pts.iter().map(|p| p.id + 1).max().unwrap_or(0);
    let mut set = CoverageSet::with_universe(universe);
    for p in pts {
        if covers(d, p) {
            set.insert(p.id);
        }
    }
    set
}

/// Union of the coverages of several disks.
pub fn coverage_of_disks(disks: &[UnitDisk], pts: &[Point]) -> CoverageSet {
    let universe = pts.iter().map(|p| p.id + 1).max().unwrap_or(0);
    let mut set = CoverageSet::with_universe(universe);
    for p in pts {
        if disks.iter().any(|d| covers(d, p)) {
            set.insert(p.id);
        }
    }
    set
}

pub fn union_cover(sets: &[CoverageSet]) -> CoverageSet {
    let mut out = CoverageSet::new();
    for s in sets {
        out.union_with(s);
    }
    out
}

/// Number of points covered by `d_sets` and by none of `e_sets`.
pub fn exclusive_cover(d_sets: &[CoverageSet], e_sets: &[CoverageSet]) -> usize {
    let mut d = union_cover(d_sets);
    d.difference_with(&union_cover(e_sets));
    d.count()
}

/// Centers of the unit circles through `p` and `q`, or `None` when the points
/// coincide or are more than 2 apart.
///
/// The first center is `p` rotated clockwise about the chord direction, i.e.
/// the disk reached at the start of `q`'s arc when sweeping around `p`
/// counter-clockwise. At distance 2 both entries are the midpoint.
pub fn through_pair_centers(p: &Point, q: &Point) -> Option<[UnitDisk; 2]> {
    let dx = q.x - p.x;
    let dy = q.y - p.y;
    let d = (dx * dx + dy * dy).sqrt();
    if d == 0.0 || d > 2.0 + EPS_DIAMETER {
        return None;
    }
    let mx = (p.x + q.x) / 2.0;
    let my = (p.y + q.y) / 2.0;
    if (d - 2.0).abs() <= EPS_DIAMETER {
        let mid = UnitDisk::new(mx, my);
        return Some([mid, mid]);
    }
    let h = (1.0 - d * d / 4.0).max(0.0).sqrt();
    // left normal of the chord, scaled to length h
    let nx = -dy / d * h;
    let ny = dx / d * h;
    Some([
        UnitDisk::new(mx - nx, my - ny),
        UnitDisk::new(mx + nx, my + ny),
    ])
}

/// The classical candidate set: one disk centered on every point, plus the
/// unit disks whose boundary passes through each pair of points at distance
/// in `(0, 2]`. Some optimal placement of any number of disks uses only these.
///
/// The result is sorted by center and deduplicated by center.
pub fn candidate_disks(pts: &[Point]) -> Vec<UnitDisk> {
    let mut out: Vec<UnitDisk> = pts.iter().map(UnitDisk::centered_at).collect();
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            if p.dist2(q) > 4.0 + 4.0 * EPS_DIAMETER + EPS_DIAMETER * EPS_DIAMETER {
                continue;
            }
            if let Some([a, b]) = through_pair_centers(p, q) {
                out.push(a);
                if !a.same_center(&b) {
                    out.push(b);
                }
            }
        }
    }
    sort_dedup_centers(&mut out);
    out
}

pub(crate) fn sort_dedup_centers(disks: &mut Vec<UnitDisk>) {
    disks.sort_by(UnitDisk::center_cmp);
    disks.dedup_by(|a, b| a.same_center(b));
}

/// Parses the point list text format: one point per line as `x y` or `x,y`,
/// blank lines and `#` comments skipped, ids assigned in line order.
pub fn parse_points(text: &str) -> Result<Vec<Point>> {
    let mut pts = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        let parse_err = |msg: String| Error::Parse {
            line: lineno + 1,
            msg,
        };
        if fields.len() != 2 {
            return Err(parse_err(format!(
                "expected 2 coordinates, found {}",
                fields.len()
            )));
        }
        let mut xy = [0.0; 2];
        for (slot, f) in xy.iter_mut().zip(&fields) {
            *slot = f
                .parse::<f64>()
                .map_err(|e| parse_err(format!("bad coordinate {f:?}: {e}")))?;
            if !slot.is_finite() {
                return Err(parse_err(format!("non-finite coordinate {f:?}")));
            }
        }
        pts.push(Point::new(pts.len(), xy[0], xy[1]));
    }
    Ok(pts)
}

/// Inverse of [`parse_points`]. Uses Rust's shortest round-trip float format,
/// so parsing the output reproduces the coordinates bit for bit.
pub fn format_points(pts: &[Point]) -> String {
    let mut s = String::new();
    for p in pts {
        s.push_str(&format!("{:?} {:?}\n", p.x, p.y));
    }
    s
}
