use mostpoints::exact::{most_points_with, ExactOptions};
use mostpoints::geom::{
    candidate_disks, coverage, covers, exclusive_cover, points_from_coords, through_pair_centers,
    union_cover, CoverageSet, Point, UnitDisk,
};
use mostpoints::greedy::{greedy_cover, solve, NEIGHBORHOOD_PACKING};
use mostpoints::{best_disk_grid, best_disk_sweep, most_points};
use proptest::prelude::*;

fn instance(max_n: usize) -> impl Strategy<Value = Vec<Point>> {
    (
        1.0f64..8.0,
        prop::collection::vec((0.0f64..1.0, 0.0f64..1.0), 1..=max_n),
    )
        .prop_map(|(side, unit)| {
            let coords: Vec<(f64, f64)> = unit.iter().map(|&(x, y)| (x * side, y * side)).collect();
            points_from_coords(&coords)
        })
}

fn id_set(universe: usize) -> impl Strategy<Value = CoverageSet> {
    prop::collection::vec(any::<bool>(), universe).prop_map(|bits| {
        bits.iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
            .collect()
    })
}

/// Best union over all k-subsets (with repetition) of the candidate set.
fn exhaustive(pts: &[Point], k: usize) -> usize {
    let covs: Vec<CoverageSet> = candidate_disks(pts)
        .iter()
        .map(|d| coverage(d, pts))
        .collect();
    fn rec(covs: &[CoverageSet], acc: &CoverageSet, start: usize, left: usize) -> usize {
        if left == 1 {
            return covs[start..]
                .iter()
                .map(|c| acc.union_count(c))
                .max()
                .unwrap_or(acc.count());
        }
        let mut best = acc.count();
        for i in start..covs.len() {
            let mut next = acc.clone();
            next.union_with(&covs[i]);
            best = best.max(rec(covs, &next, i, left - 1));
        }
        best
    }
    rec(&covs, &CoverageSet::new(), 0, k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn covers_is_symmetric(ax in -50.0f64..50.0, ay in -50.0f64..50.0, dx in -2.0f64..2.0, dy in -2.0f64..2.0) {
        let a = Point::new(0, ax, ay);
        let b = Point::new(1, ax + dx, ay + dy);
        prop_assert_eq!(
            covers(&UnitDisk::centered_at(&a), &b),
            covers(&UnitDisk::centered_at(&b), &a)
        );
    }

    #[test]
    fn through_pair_disks_cover_both_points(pts in instance(12)) {
        for (i, p) in pts.iter().enumerate() {
            for q in &pts[i + 1..] {
                if let Some(ds) = through_pair_centers(p, q) {
                    for d in ds {
                        prop_assert!(covers(&d, p) && covers(&d, q));
                    }
                }
            }
        }
    }

    #[test]
    fn candidate_count_is_at_most_n_squared(pts in instance(25)) {
        let n = pts.len();
        prop_assert!(candidate_disks(&pts).len() <= n * n);
    }

    #[test]
    fn exclusive_cover_identities(d in id_set(150), e in id_set(150)) {
        let cover = |s: &[CoverageSet]| union_cover(s).count();
        let both = [d.clone(), e.clone()];
        prop_assert!(exclusive_cover(std::slice::from_ref(&d), std::slice::from_ref(&e)) <= d.count());
        prop_assert_eq!(cover(&both), d.count() + exclusive_cover(std::slice::from_ref(&e), std::slice::from_ref(&d)));
        prop_assert!(cover(&both) <= d.count() + e.count());
    }

    #[test]
    fn grid_matches_sweep(pts in instance(60)) {
        let g = best_disk_grid(&pts).unwrap();
        let s = best_disk_sweep(&pts).unwrap();
        prop_assert_eq!(g.rho_witness, s.rho_witness);
        prop_assert_eq!(&g.covered, &coverage(&g.disk, &pts));
        prop_assert_eq!(s.rho_witness, exhaustive(&pts, 1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_is_optimal(pts in instance(25), k in 1usize..=3) {
        let r = most_points(&pts, k, false).unwrap();
        prop_assert_eq!(r.covered.count(), exhaustive(&pts, k));
        prop_assert_eq!(r.disks.len(), k);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn exact_monotone_dedup_and_pruning(pts in instance(20), k in 1usize..=2) {
        let base = most_points(&pts, k, false).unwrap();
        let dedup = most_points(&pts, k, true).unwrap();
        let pruned = most_points_with(&pts, k, ExactOptions { dedup: true, prune: true }).unwrap();
        let more = most_points(&pts, k + 1, true).unwrap();
        prop_assert_eq!(base.covered.count(), dedup.covered.count());
        prop_assert_eq!(base.covered.count(), pruned.covered.count());
        prop_assert!(pruned.stats.combos_evaluated <= dedup.stats.combos_evaluated);
        prop_assert!(more.covered.count() >= base.covered.count());
        let c = dedup.stats.candidates_after_dedup as u64;
        if k == 2 {
            prop_assert!(dedup.stats.combos_evaluated <= c * c.saturating_sub(1) / 2 + c);
        }
    }

    #[test]
    fn solve_is_optimal_and_traces_hold(pts in instance(25), m in 1usize..=3) {
        let s = solve(&pts, m).unwrap();
        let exact = most_points(&pts, m, true).unwrap();
        prop_assert_eq!(s.covered.count(), exact.covered.count());
        prop_assert_eq!(s.disks.len(), m);

        let mut prev = s.rho;
        for t in &s.traces {
            prop_assert!(t.neighborhood_size <= NEIGHBORHOOD_PACKING * s.rho * (t.i - 1));
            prop_assert!(t.greedy_gain >= prev);
            let chosen = t.greedy_gain.max(t.exact_value);
            prop_assert!(chosen >= prev);
            prop_assert_eq!(t.chose_greedy, t.greedy_gain > t.exact_value);
            prev = chosen;
        }
        prop_assert_eq!(prev, s.covered.count());

        let greedy = greedy_cover(&pts, m).unwrap().covered.count() as f64;
        prop_assert!(greedy >= (1.0 - (-1.0f64).exp()) * exact.covered.count() as f64 - 1e-9);
    }

    #[test]
    fn two_disk_dichotomy(pts in instance(25)) {
        let s = solve(&pts, 2).unwrap();
        let t = s.traces[0];
        let greedy = greedy_cover(&pts, 2).unwrap().covered.count();
        prop_assert_eq!(t.greedy_gain, greedy);
        prop_assert!(s.covered.count() == greedy || t.exact_value >= greedy);
    }

    #[test]
    fn neighborhood_search_does_fewer_pairs(pts in instance(25)) {
        let s = solve(&pts, 2).unwrap();
        if s.rho < pts.len() {
            let baseline = most_points(&pts, 2, false).unwrap();
            prop_assert!(s.total_combos <= baseline.stats.combos_evaluated);
        }
    }
}
