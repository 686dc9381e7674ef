//! Pair-count comparison between the full enumeration baseline and the
//! neighborhood solver on uniform random instances.

use std::time::Instant;

use serde::Serialize;

use mostpoints::exact::ExactOptions;
use mostpoints::greedy::{solve_with, SolveOptions};
use mostpoints::most_points;

use crate::error::{HarnessError, Result};
use crate::gen::generate;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BenchConfig {
    pub n: usize,
    pub side: f64,
}

/// One (config, seed) run. Field order is the CSV column order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRecord {
    pub n: usize,
    pub side: f64,
    pub rho: usize,
    pub pairs_baseline: u64,
    pub pairs_ours: u64,
    pub cover_baseline: usize,
    pub cover_ours: usize,
    pub time_baseline_ms: f64,
    pub time_ours_ms: f64,
    pub seed: u64,
}

pub const TIMING_COLUMNS: [&str; 2] = ["time_baseline_ms", "time_ours_ms"];

/// Parses `"n:side,n:side,..."`.
pub fn parse_configs(s: &str) -> Result<Vec<BenchConfig>> {
    let bad =
        |item: &str| HarnessError::InvalidParam(format!("bad config {item:?}, expected n:side"));
    let configs = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|item| {
            let (n, side) = item.split_once(':').ok_or_else(|| bad(item))?;
            let n: usize = n.trim().parse().map_err(|_| bad(item))?;
            let side: f64 = side.trim().parse().map_err(|_| bad(item))?;
            if n == 0 || !(side.is_finite() && side > 0.0) {
                return Err(bad(item));
            }
            Ok(BenchConfig { n, side })
        })
        .collect::<Result<Vec<_>>>()?;
    if configs.is_empty() {
        return Err(HarnessError::InvalidParam("no configs given".into()));
    }
    Ok(configs)
}

pub fn parse_seeds(s: &str) -> Result<Vec<u64>> {
    let seeds = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| HarnessError::InvalidParam(format!("bad seed {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if seeds.is_empty() {
        return Err(HarnessError::InvalidParam("no seeds given".into()));
    }
    Ok(seeds)
}

pub fn run_one(cfg: BenchConfig, m: usize, seed: u64) -> Result<BenchRecord> {
    let fail = |msg: String| HarnessError::Bench {
        n: cfg.n,
        side: cfg.side,
        seed,
        msg,
    };
    let inst = generate(cfg.n, cfg.side, seed).map_err(|e| fail(e.to_string()))?;
    let pts = &inst.points;

    let t0 = Instant::now();
    let baseline = most_points(pts, m, false).map_err(|e| fail(e.to_string()))?;
    let time_baseline_ms = t0.elapsed().as_secs_f64() * 1e3;

    // same enumeration as the baseline so the pair counts are comparable
    let opts = SolveOptions {
        exact: ExactOptions {
            dedup: false,
            prune: false,
        },
    };
    let t1 = Instant::now();
    let ours = solve_with(pts, m, opts).map_err(|e| fail(e.to_string()))?;
    let time_ours_ms = t1.elapsed().as_secs_f64() * 1e3;

    let rec = BenchRecord {
        n: cfg.n,
        side: cfg.side,
        rho: ours.rho,
        pairs_baseline: baseline.stats.combos_evaluated,
        pairs_ours: ours.total_combos,
        cover_baseline: baseline.covered.count(),
        cover_ours: ours.covered.count(),
        time_baseline_ms,
        time_ours_ms,
        seed,
    };
    if rec.cover_baseline != rec.cover_ours {
        return Err(fail(format!(
            "coverage mismatch: baseline {} vs ours {}",
            rec.cover_baseline, rec.cover_ours
        )));
    }
    Ok(rec)
}

/// Runs every config × seed; rows come back sorted by `(n, side, seed)`.
pub fn bench(configs: &[BenchConfig], m: usize, seeds: &[u64]) -> Result<Vec<BenchRecord>> {
    if configs.is_empty() || seeds.is_empty() {
        return Err(HarnessError::InvalidParam(
            "configs and seeds must be non-empty".into(),
        ));
    }
    if m == 0 {
        return Err(HarnessError::InvalidParam("m must be at least 1".into()));
    }
    let mut out = Vec::with_capacity(configs.len() * seeds.len());
    for &cfg in configs {
        for &seed in seeds {
            out.push(run_one(cfg, m, seed)?);
        }
    }
    out.sort_by(|a, b| {
        a.n.cmp(&b.n)
            .then(a.side.total_cmp(&b.side))
            .then(a.seed.cmp(&b.seed))
    });
    Ok(out)
}

pub fn to_csv(records: &[BenchRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.serialize(r)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| HarnessError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// CSV text with the timing columns dropped, for run-to-run comparison.
pub fn strip_timing(csv_text: &str) -> Result<String> {
    let mut r = csv::Reader::from_reader(csv_text.as_bytes());
    let headers = r.headers()?.clone();
    let keep: Vec<usize> = headers
        .iter()
        .enumerate()
        .filter(|(_, h)| !TIMING_COLUMNS.contains(h))
        .map(|(i, _)| i)
        .collect();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(keep.iter().map(|&i| &headers[i]))?;
    for row in r.records() {
        let row = row?;
        w.write_record(keep.iter().map(|&i| &row[i]))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| HarnessError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Medians over the seeds of one config.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConfigSummary {
    pub n: usize,
    pub side: f64,
    pub seeds: usize,
    pub median_rho: f64,
    pub median_pairs_baseline: f64,
    pub median_pairs_ours: f64,
}

impl ConfigSummary {
    pub fn ratio(&self) -> f64 {
        self.median_pairs_baseline / self.median_pairs_ours.max(1.0)
    }

    pub fn rho_fraction(&self) -> f64 {
        self.median_rho / self.n as f64
    }
}

pub fn median(values: &mut [f64]) -> f64 {
    assert!(!values.is_empty(), "median of nothing");
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid]
    } else {
        (values[mid - 1] + values[mid]) / 2.0
    }
}

/// Groups sorted records by `(n, side)`.
pub fn summarize(records: &[BenchRecord]) -> Vec<ConfigSummary> {
    let mut out = Vec::new();
    let mut start = 0;
    while start < records.len() {
        let (n, side) = (records[start].n, records[start].side);
        let end = records[start..]
            .iter()
            .position(|r| r.n != n || r.side != side)
            .map_or(records.len(), |p| start + p);
        let group = &records[start..end];
        let col = |f: fn(&BenchRecord) -> f64| median(&mut group.iter().map(f).collect::<Vec<_>>());
        out.push(ConfigSummary {
            n,
            side,
            seeds: group.len(),
            median_rho: col(|r| r.rho as f64),
            median_pairs_baseline: col(|r| r.pairs_baseline as f64),
            median_pairs_ours: col(|r| r.pairs_ours as f64),
        });
        start = end;
    }
    out
}
