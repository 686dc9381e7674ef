//! JSON form of a solution, as printed by `mostpoints solve --json`.

use serde::Serialize;

use mostpoints::greedy::{IterationTrace, Solution};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiskJson {
    pub cx: f64,
    pub cy: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolutionReport {
    pub disks: Vec<DiskJson>,
    pub covered: usize,
    pub rho: usize,
    pub traces: Vec<IterationTrace>,
    pub total_combos: u64,
}

impl From<&Solution> for SolutionReport {
    fn from(s: &Solution) -> Self {
        SolutionReport {
            disks: s
                .disks
                .iter()
                .map(|d| DiskJson { cx: d.cx, cy: d.cy })
                .collect(),
            covered: s.covered.count(),
            rho: s.rho,
            traces: s.traces.clone(),
            total_combos: s.total_combos,
        }
    }
}

impl SolutionReport {
    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }
}
