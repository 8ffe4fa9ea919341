use std::f64::consts::PI;

use hyperlab::special_functions::{li2, rogers_l, ReductionPath};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn li(x: f64) -> f64 {
    li2(x).unwrap().value
}

#[test]
fn reflection_residual_on_200_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let x: f64 = rng.gen_range(1e-9..1.0);
        let r = li(x) + li(1.0 - x) + x.ln() * (1.0 - x).ln() - PI * PI / 6.0;
        worst = worst.max(r.abs());
    }
    assert!(worst <= 1e-13, "worst reflection residual {worst:e}");
}

#[test]
fn landen_residual_on_200_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let x: f64 = rng.gen_range(-20.0..1.0);
        let l = (1.0 - x).ln();
        let r = li(x) + li(x / (x - 1.0)) + 0.5 * l * l;
        worst = worst.max(r.abs());
    }
    assert!(worst <= 1e-13, "worst Landen residual {worst:e}");
}

#[test]
fn series_oracle_on_central_disc() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let x: f64 = rng.gen_range(-0.5..=0.5);
        let mut direct = 0.0;
        let mut pow = 1.0;
        for k in 1..=200 {
            pow *= x;
            direct += pow / (k * k) as f64;
        }
        let got = li(x);
        assert!((got - direct).abs() <= 1e-15, "x = {x}: {got} vs {direct}");
    }
}

#[test]
fn strictly_increasing_on_grid() {
    let mut grid: Vec<f64> = (0..=4000)
        .map(|i| -30.0 + 31.0 * i as f64 / 4000.0)
        .collect();
    grid.retain(|&x| x <= 1.0);
    grid.extend([0.999_999, 0.999_999_999, 1.0]);
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    for w in grid.windows(2) {
        assert!(
            li(w[0]) < li(w[1]),
            "not increasing between {} and {}",
            w[0],
            w[1]
        );
    }
}

#[test]
fn every_path_is_exercised() {
    let paths: Vec<_> = [0.1, 0.9, -0.9, -9.0]
        .iter()
        .map(|&x| li2(x).unwrap().reduction_path)
        .collect();
    assert_eq!(
        paths,
        [
            ReductionPath::DirectSeries,
            ReductionPath::Reflection,
            ReductionPath::Landen,
            ReductionPath::ReflectionThenLanden
        ]
    );
}

#[test]
fn rogers_reflection_from_dilog_reflection() {
    for x in [0.1f64, 0.25, 0.5, 0.9] {
        let s = rogers_l(x).unwrap() + rogers_l(1.0 - x).unwrap();
        assert!((s - 1.0).abs() <= 1e-14, "x = {x}: {s}");
    }
}

proptest! {
    #[test]
    fn finite_on_real_branch(x in -1e8f64..=1.0) {
        let v = li2(x).unwrap();
        prop_assert!(v.value.is_finite());
        prop_assert!(v.terms_used < 64);
    }

    #[test]
    fn sign_matches_argument(x in -50.0f64..=1.0) {
        let v = li(x);
        if x > 0.0 { prop_assert!(v > 0.0) } else if x < 0.0 { prop_assert!(v < 0.0) }
    }

    #[test]
    fn rejects_arguments_above_one(x in 1.0000001f64..1e6) {
        prop_assert!(li2(x).is_err());
    }
}
