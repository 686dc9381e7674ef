//! Reproducible uniform instances.
//!
//! The generator is fixed so that any implementation can rebuild the same
//! point sets:
//!
//! 1. Seed xoshiro256++ with four consecutive SplitMix64 outputs of `seed`
//!    (SplitMix64: `s += 0x9e3779b97f4a7c15; z = s; z = (z ^ z>>30) *
//!    0xbf58476d1ce4e5b9; z = (z ^ z>>27) * 0x94d049bb133111eb; z ^ z>>31`).
//! 2. For each point in order draw `x`, then `y`, each as
//!    `side * ((next_u64() >> 11) as f64 * 2^-53)`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use serde::{Deserialize, Serialize};

use mostpoints::geom::Point;

use crate::error::{HarnessError, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum InstanceMeta {
    UniformSquare { n: usize, side: f64, seed: u64 },
    File { path: String, n: usize },
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub points: Vec<Point>,
    pub m: usize,
    pub meta: InstanceMeta,
}

/// Uniform draw in `[0, 1)` with 53 bits of precision.
pub fn unit_f64(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

pub fn rng_for(seed: u64) -> Xoshiro256PlusPlus {
    Xoshiro256PlusPlus::seed_from_u64(seed)
}

/// `n` points uniform in `[0, side]²`.
pub fn generate(n: usize, side: f64, seed: u64) -> Result<Instance> {
    if n == 0 {
        return Err(HarnessError::InvalidParam("n must be at least 1".into()));
    }
    if !(side.is_finite() && side > 0.0) {
        return Err(HarnessError::InvalidParam(format!(
            "side must be positive, got {side}"
        )));
    }
    let mut rng = rng_for(seed);
    let points = (0..n)
        .map(|id| {
            let x = side * unit_f64(&mut rng);
            let y = side * unit_f64(&mut rng);
            Point::new(id, x, y)
        })
        .collect();
    Ok(Instance {
        points,
        m: 2,
        meta: InstanceMeta::UniformSquare { n, side, seed },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_point_in_bounds() {
        let inst = generate(1, 10.0, 0).unwrap();
        assert_eq!(inst.points.len(), 1);
        let p = inst.points[0];
        assert!((0.0..=10.0).contains(&p.x) && (0.0..=10.0).contains(&p.y));
    }

    #[test]
    fn thousand_points_in_bounds() {
        for seed in [0, 1, 99] {
            let inst = generate(1000, 200.0, seed).unwrap();
            assert_eq!(inst.points.len(), 1000);
            assert!(inst
                .points
                .iter()
                .all(|p| (0.0..=200.0).contains(&p.x) && (0.0..=200.0).contains(&p.y)));
            assert!(inst.points.iter().enumerate().all(|(i, p)| p.id == i));
        }
    }

    #[test]
    fn matches_reference_stream() {
        // first draws for seed 0, from a standalone SplitMix64 + xoshiro256++
        let mut rng = rng_for(0);
        assert_eq!(rng.next_u64(), 0x53175d61490b23df);
        assert_eq!(rng.next_u64(), 0x61da6f3dc380d507);
        let inst = generate(2, 1.0, 0).unwrap();
        assert_eq!(
            inst.points[0].x,
            (0x53175d61490b23dfu64 >> 11) as f64 / 9007199254740992.0
        );
    }

    #[test]
    fn deterministic_per_seed() {
        let a = generate(50, 7.5, 1234).unwrap();
        let b = generate(50, 7.5, 1234).unwrap();
        let c = generate(50, 7.5, 1235).unwrap();
        assert_eq!(a.points, b.points);
        assert_ne!(a.points, c.points);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(generate(0, 1.0, 0).is_err());
        assert!(generate(5, 0.0, 0).is_err());
        assert!(generate(5, f64::NAN, 0).is_err());
    }
}
