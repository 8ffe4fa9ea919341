use hyperlab::change_of_variables::{
    curve_f, curve_g, forward, h_curve, in_region, inverse, jacobian, rotate,
};
use hyperlab::special_functions::const_alpha;
use hyperlab::{MapPoint, RotatedPoint, SquarePoint};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Points of S at least `margin` inside its boundary, by rejection from the
/// box `[0, 4]^2`.
fn interior_points(seed: u64, n: usize, margin: f64) -> Vec<MapPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let u: f64 = rng.gen_range(margin..4.0);
        let v: f64 = rng.gen_range(margin..4.0);
        let p = MapPoint::new(u, v);
        if v < curve_f(u).unwrap() - margin && u < curve_f(v).unwrap() - margin {
            out.push(p);
        }
    }
    out
}

fn square_points(seed: u64, n: usize) -> Vec<SquarePoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| SquarePoint::new(rng.gen_range(1e-9..1.0), rng.gen_range(1e-9..1.0)))
        .collect()
}

#[test]
fn round_trip_from_region() {
    for p in interior_points(1, 1000, 1e-9) {
        let back = inverse(forward(p).unwrap()).unwrap();
        assert!((back.u - p.u).abs() <= 1e-12, "{p:?} -> {back:?}");
        assert!((back.v - p.v).abs() <= 1e-12, "{p:?} -> {back:?}");
    }
}

#[test]
fn round_trip_from_square() {
    for q in square_points(2, 1000) {
        let back = forward(inverse(q).unwrap()).unwrap();
        assert!((back.x - q.x).abs() <= 1e-12, "{q:?} -> {back:?}");
        assert!((back.y - q.y).abs() <= 1e-12, "{q:?} -> {back:?}");
    }
}

#[test]
fn jacobian_equals_one_minus_x2y2() {
    for p in interior_points(3, 500, 1e-9) {
        let q = forward(p).unwrap();
        let expected = 1.0 - q.x * q.x * q.y * q.y;
        assert!((jacobian(p) - expected).abs() <= 1e-13, "{p:?}");
    }
}

#[test]
fn jacobian_positive_on_interior() {
    for p in interior_points(4, 500, 1e-6) {
        let j = jacobian(p);
        assert!(j > 0.0 && j <= 1.0, "{p:?}: {j}");
    }
}

fn fd_determinant(f: impl Fn(f64, f64) -> (f64, f64), a: f64, b: f64, h: f64) -> f64 {
    let (xa1, ya1) = f(a + h, b);
    let (xa0, ya0) = f(a - h, b);
    let (xb1, yb1) = f(a, b + h);
    let (xb0, yb0) = f(a, b - h);
    let dxda = (xa1 - xa0) / (2.0 * h);
    let dyda = (ya1 - ya0) / (2.0 * h);
    let dxdb = (xb1 - xb0) / (2.0 * h);
    let dydb = (yb1 - yb0) / (2.0 * h);
    dxda * dydb - dxdb * dyda
}

#[test]
fn jacobian_matches_finite_differences() {
    let h = 1e-5;
    let fwd = |u: f64, v: f64| {
        let q = forward(MapPoint::new(u, v)).unwrap();
        (q.x, q.y)
    };
    for p in interior_points(5, 300, 1e-3) {
        let fd = fd_determinant(fwd, p.u, p.v, h);
        let j = jacobian(p);
        assert!(((fd - j) / j).abs() <= 1e-6, "{p:?}: fd {fd} vs {j}");
    }
}

#[test]
fn inverse_jacobian_is_reciprocal() {
    let h = 1e-5;
    let inv = |x: f64, y: f64| {
        let p = inverse(SquarePoint::new(x, y)).unwrap();
        (p.u, p.v)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..300 {
        let x: f64 = rng.gen_range(0.01..0.99);
        let y: f64 = rng.gen_range(0.01..0.99);
        let fd = fd_determinant(inv, x, y, h);
        let expected = 1.0 / jacobian(inverse(SquarePoint::new(x, y)).unwrap());
        assert!(((fd - expected) / expected).abs() <= 1e-5, "({x}, {y})");
    }
}

#[test]
fn boundary_curves_map_to_square_edges() {
    let alpha: f64 = const_alpha();
    for i in 0..=100 {
        let u = 8.0 * i as f64 / 100.0;
        let top = forward(MapPoint::new(u, curve_f(u).unwrap())).unwrap();
        assert!((top.y - 1.0).abs() <= 1e-12, "u = {u}: {top:?}");
        let ug = alpha + u;
        let side = forward(MapPoint::new(ug, curve_g(ug).unwrap())).unwrap();
        assert!((side.x - 1.0).abs() <= 1e-12, "u = {ug}: {side:?}");
    }
}

#[test]
fn map_is_symmetric_about_diagonal() {
    for p in interior_points(7, 300, 1e-9) {
        let q = forward(p).unwrap();
        let s = forward(p.swap()).unwrap();
        assert_eq!((q.x, q.y), (s.y, s.x));
    }
}

#[test]
fn curve_ordering() {
    let alpha: f64 = const_alpha();
    for i in 0..=200 {
        let u = 10.0 * i as f64 / 200.0;
        assert!(curve_f(u).unwrap() > u);
        if u > alpha {
            assert!(curve_g(u).unwrap() < u);
        }
    }
}

#[test]
fn rotated_boundary_lies_on_upper_curve() {
    for x in [0.7, 1.0, 2.0, 5.0, 12.0] {
        let p = rotate(RotatedPoint::new(x, h_curve(x).unwrap()));
        assert!((p.v.sinh() - p.u.cosh()).abs() <= 1e-12 * p.u.cosh().max(1.0));
        assert!((p.v - curve_f(p.u.max(0.0)).unwrap()).abs() <= 1e-12);
    }
}

proptest! {
    #[test]
    fn curves_are_mutual_inverses(u in 0.0f64..30.0) {
        let back = curve_g(curve_f(u).unwrap()).unwrap();
        prop_assert!((back - u).abs() <= 1e-12);
    }

    #[test]
    fn forward_lands_in_closed_square(u in 0.0f64..6.0, frac in 0.0f64..1.0) {
        // v anywhere between the lower and upper boundary at this u
        let lo = if u > const_alpha::<f64>() { curve_g(u).unwrap() } else { 0.0 };
        let v = lo + frac * (curve_f(u).unwrap() - lo);
        let p = MapPoint::new(u, v);
        prop_assert!(in_region(p, 1e-12));
        let q = forward(p).unwrap();
        prop_assert!((0.0..=1.0 + 1e-12).contains(&q.x));
        prop_assert!((0.0..=1.0 + 1e-12).contains(&q.y));
    }
}
