//! Randomized cross-check of the neighborhood solver against full
//! enumeration.

use std::fmt;
use std::time::{Duration, Instant};

use rand_core::RngCore;
use serde::Serialize;

use mostpoints::geom::{coverage, exclusive_cover, union_cover, CoverageSet};
use mostpoints::greedy::{greedy_cover, solve, NEIGHBORHOOD_PACKING};
use mostpoints::most_points;

use crate::error::{HarnessError, Result};
use crate::gen::{generate, rng_for, unit_f64};

/// Side lengths of verification instances are drawn from this range, dense
/// enough that disks overlap and the neighborhood branch matters.
pub const SIDE_RANGE: (f64, f64) = (1.0, 8.0);

#[derive(Clone, Debug)]
pub struct VerifyParams {
    pub trials: usize,
    pub n_max: usize,
    pub m_max: usize,
    pub seed: u64,
    /// Stop starting new trials once this much time has passed.
    pub time_budget: Option<Duration>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyFailure {
    pub n: usize,
    pub side: f64,
    pub seed: u64,
    pub m: usize,
    pub reason: String,
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (reproduce: gen --n {} --side {:?} --seed {}, then solve --m {})",
            self.reason, self.n, self.side, self.seed, self.m
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct VerifyReport {
    pub trials_requested: usize,
    pub trials_run: usize,
    pub passed: usize,
    pub timed_out: bool,
    pub failures: Vec<VerifyFailure>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.passed == self.trials_run
    }
}

/// Parameters of one trial: `(n, m, side, instance seed)`.
pub fn trial_params(
    rng: &mut impl RngCore,
    n_max: usize,
    m_max: usize,
) -> (usize, usize, f64, u64) {
    let n = 1 + (rng.next_u64() % n_max as u64) as usize;
    let m = 1 + (rng.next_u64() % m_max as u64) as usize;
    let side = SIDE_RANGE.0 + (SIDE_RANGE.1 - SIDE_RANGE.0) * unit_f64(rng);
    (n, m, side, rng.next_u64())
}

/// Runs all checks on one instance; returns the first violated one.
pub fn check_instance(
    n: usize,
    side: f64,
    seed: u64,
    m: usize,
) -> Result<std::result::Result<(), String>> {
    let inst = generate(n, side, seed)?;
    let pts = &inst.points;
    let ours = solve(pts, m)?;
    let exact = most_points(pts, m, true)?;
    if ours.covered.count() != exact.covered.count() {
        return Ok(Err(format!(
            "coverage {} differs from exact {}",
            ours.covered.count(),
            exact.covered.count()
        )));
    }
    for t in &ours.traces {
        let bound = NEIGHBORHOOD_PACKING * ours.rho * (t.i - 1);
        if t.neighborhood_size > bound {
            return Ok(Err(format!(
                "iteration {}: neighborhood of {} points exceeds {bound}",
                t.i, t.neighborhood_size
            )));
        }
    }

    let greedy = greedy_cover(pts, m)?;
    let bound = (1.0 - (-1.0f64).exp()) * exact.covered.count() as f64 - 1e-9;
    if (greedy.covered.count() as f64) < bound {
        return Ok(Err(format!(
            "greedy cover {} below (1-1/e)·OPT",
            greedy.covered.count()
        )));
    }

    let d: Vec<CoverageSet> = ours.disks.iter().map(|x| coverage(x, pts)).collect();
    let e: Vec<CoverageSet> = greedy.disks.iter().map(|x| coverage(x, pts)).collect();
    let cover_d = union_cover(&d).count();
    let cover_e = union_cover(&e).count();
    let cover_de = union_cover(&[d.clone(), e.clone()].concat()).count();
    if exclusive_cover(&d, &e) > cover_d
        || cover_de != cover_d + exclusive_cover(&e, &d)
        || cover_de > cover_d + cover_e
    {
        return Ok(Err("exclusive-cover identity violated".into()));
    }
    Ok(Ok(()))
}

pub fn verify(params: &VerifyParams) -> Result<VerifyReport> {
    if params.trials == 0 || params.n_max == 0 || params.m_max == 0 {
        return Err(HarnessError::InvalidParam(
            "trials, n-max and m-max must be at least 1".into(),
        ));
    }
    let start = Instant::now();
    let mut rng = rng_for(params.seed);
    let mut report = VerifyReport {
        trials_requested: params.trials,
        ..Default::default()
    };
    for _ in 0..params.trials {
        if params.time_budget.is_some_and(|b| start.elapsed() > b) {
            report.timed_out = true;
            break;
        }
        let (n, m, side, seed) = trial_params(&mut rng, params.n_max, params.m_max);
        report.trials_run += 1;
        match check_instance(n, side, seed, m)? {
            Ok(()) => report.passed += 1,
            Err(reason) => report.failures.push(VerifyFailure {
                n,
                side,
                seed,
                m,
                reason,
            }),
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(trials: usize, n_max: usize, m_max: usize) -> VerifyParams {
        VerifyParams {
            trials,
            n_max,
            m_max,
            seed: 17,
            time_budget: None,
        }
    }

    #[test]
    fn two_hundred_trials_pass() {
        let r = verify(&params(200, 20, 2)).unwrap();
        assert_eq!(r.passed, 200, "{:?}", r.failures);
        assert!(r.ok());
    }

    #[test]
    fn single_point_single_disk() {
        let r = verify(&params(1, 1, 1)).unwrap();
        assert_eq!((r.trials_run, r.passed), (1, 1));
    }

    #[test]
    fn zero_budget_stops_early() {
        let mut p = params(50, 10, 2);
        p.time_budget = Some(Duration::ZERO);
        let r = verify(&p).unwrap();
        assert!(r.timed_out);
        assert!(r.trials_run < 50);
    }

    #[test]
    fn rejects_zero_parameters() {
        assert!(verify(&params(0, 5, 1)).is_err());
        assert!(verify(&params(5, 0, 1)).is_err());
    }
}
