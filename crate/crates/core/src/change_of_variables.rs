//! The hyperbolic substitution
//!
//! ```text
//! x = sinh u / cosh v,    y = sinh v / cosh u
//! ```
//!
//! which maps the region `S` of the `(u, v)` quarter plane onto the unit
//! square with Jacobian `1 - tanh^2 u tanh^2 v = 1 - x^2 y^2`. `S` is bounded
//! by the axes, the curve `v = f(u) = asinh(cosh u)` above the diagonal and
//! its mirror image `v = g(u) = acosh(sinh u)` (for `u >= alpha`) below it.

use crate::special_functions::const_alpha;
use crate::{Error, Result, Scalar};

/// Width of the band around the boundary curves accepted as inside `S`.
pub const REGION_TOLERANCE: f64 = 1e-12;

/// `acosh` arguments this far below 1 are treated as rounding and clamped.
const ACOSH_CLAMP: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquarePoint<T> {
    pub x: T,
    pub y: T,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapPoint<T> {
    pub u: T,
    pub v: T,
}

/// Coordinates in the `(u, v)` plane rotated by a quarter turn of pi/4.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotatedPoint<T> {
    pub x: T,
    pub y: T,
}

impl<T> SquarePoint<T> {
    pub fn new(x: T, y: T) -> Self {
        SquarePoint { x, y }
    }
}

impl<T> MapPoint<T> {
    pub fn new(u: T, v: T) -> Self {
        MapPoint { u, v }
    }

    pub fn swap(self) -> Self {
        MapPoint {
            u: self.v,
            v: self.u,
        }
    }
}

impl<T> RotatedPoint<T> {
    pub fn new(x: T, y: T) -> Self {
        RotatedPoint { x, y }
    }
}

/// `acosh(t) = ln(t + sqrt(t^2 - 1))` for `t >= 1`, accepting arguments a
/// rounding error below 1.
pub fn acosh_log<T: Scalar>(t: T) -> Result<T> {
    let one = T::one();
    if !t.is_finite() || t < one - T::lit(ACOSH_CLAMP) {
        return Err(Error::domain(
            "acosh",
            format!("argument must be >= 1, got {t}"),
        ));
    }
    let t = t.max(one);
    Ok((t + (t * t - one).sqrt()).ln())
}

/// `asinh(cosh u) - u` without cancellation: with `e = exp(-2u)` and
/// `c = (1 + e)/2` it equals `ln(c + sqrt(c^2 + e))`, written as a `ln_1p`.
pub fn f_minus_u<T: Scalar>(u: T) -> T {
    let half = T::lit(0.5);
    let e = (-(u + u)).exp();
    let c = (T::one() + e) * half;
    let root = (c * c + e).sqrt();
    // c + root - 1 = e/2 + e (3/2 + e/4) / (root + 1/2)
    let excess = e * half + e * (T::lit(1.5) + e * T::lit(0.25)) / (root + half);
    excess.ln_1p()
}

/// `u - acosh(sinh u)` for `u >= alpha` without cancellation: with
/// `e = exp(-2u)` and `s = (1 - e)/2` it equals `-ln(s + sqrt(s^2 - e))`.
pub fn u_minus_g<T: Scalar>(u: T) -> Result<T> {
    let alpha = const_alpha::<T>();
    if !u.is_finite() || u < alpha - T::lit(REGION_TOLERANCE) {
        return Err(Error::domain(
            "u_minus_g",
            format!("requires u >= alpha = {alpha}, got {u}"),
        ));
    }
    let half = T::lit(0.5);
    let e = (-(u + u)).exp();
    let s = (T::one() - e) * half;
    let root = (s * s - e).max(T::zero()).sqrt();
    // s + root - 1 = -e/2 - e (3/2 - e/4) / (root + 1/2)
    let deficit = e * half + e * (T::lit(1.5) - e * T::lit(0.25)) / (root + half);
    Ok(-(-deficit).ln_1p())
}

/// Upper boundary `f(u) = asinh(cosh u)`, defined for `u >= 0`.
pub fn curve_f<T: Scalar>(u: T) -> Result<T> {
    if !u.is_finite() || u < T::zero() {
        return Err(Error::domain(
            "curve_f",
            format!("requires u >= 0, got {u}"),
        ));
    }
    Ok(u + f_minus_u(u))
}

/// Lower boundary `g(u) = acosh(sinh u)`, defined for `u >= alpha`.
pub fn curve_g<T: Scalar>(u: T) -> Result<T> {
    let alpha = const_alpha::<T>();
    if !u.is_finite() || u < alpha - T::lit(REGION_TOLERANCE) {
        return Err(Error::domain(
            "curve_g",
            format!("requires u >= alpha = {alpha}, got {u}"),
        ));
    }
    if u < T::lit(20.0) {
        acosh_log(u.sinh())
    } else {
        Ok(u - u_minus_g(u)?)
    }
}

/// Membership in the closed region `S`, up to `tol` around its boundary.
///
/// By symmetry about the diagonal, `v >= g(u)` is the same condition as
/// `u <= f(v)`.
pub fn in_region<T: Scalar>(p: MapPoint<T>, tol: T) -> bool {
    if !(p.u.is_finite() && p.v.is_finite()) {
        return false;
    }
    if p.u < -tol || p.v < -tol {
        return false;
    }
    let u = p.u.max(T::zero());
    let v = p.v.max(T::zero());
    v <= u + f_minus_u(u) + tol && u <= v + f_minus_u(v) + tol
}

/// Forward map `(u, v) -> (sinh u / cosh v, sinh v / cosh u)` on `S`.
pub fn forward<T: Scalar>(p: MapPoint<T>) -> Result<SquarePoint<T>> {
    if !in_region(p, T::lit(REGION_TOLERANCE)) {
        return Err(Error::domain(
            "forward",
            format!("({}, {}) lies outside the mapped region", p.u, p.v),
        ));
    }
    Ok(forward_unchecked(p))
}

fn forward_unchecked<T: Scalar>(p: MapPoint<T>) -> SquarePoint<T> {
    SquarePoint {
        x: p.u.sinh() / p.v.cosh(),
        y: p.v.sinh() / p.u.cosh(),
    }
}

/// Inverse map
///
/// ```text
/// u = acosh sqrt((1 + x^2) / (1 - x^2 y^2))
/// v = acosh sqrt((1 + y^2) / (1 - x^2 y^2))
/// ```
///
/// on the unit square minus the corner `(1, 1)`.
pub fn inverse<T: Scalar>(q: SquarePoint<T>) -> Result<MapPoint<T>> {
    let (zero, one) = (T::zero(), T::one());
    let inside = |c: T| c.is_finite() && c >= zero && c <= one;
    if !(inside(q.x) && inside(q.y)) {
        return Err(Error::domain(
            "inverse",
            format!("({}, {}) lies outside the unit square", q.x, q.y),
        ));
    }
    let xy = q.x * q.y;
    let gap = (one - xy) * (one + xy);
    if gap <= zero {
        return Err(Error::domain(
            "inverse",
            "the map is singular at the corner (1, 1)",
        ));
    }
    Ok(MapPoint {
        u: acosh_of_ratio(q.x, q.y, gap),
        v: acosh_of_ratio(q.y, q.x, gap),
    })
}

/// `acosh(t)` with `t^2 = (1 + a^2)/gap`, using the exact identity
/// `t^2 - 1 = a^2 (1 + b^2)/gap` so that small `a` keeps full accuracy.
fn acosh_of_ratio<T: Scalar>(a: T, b: T, gap: T) -> T {
    let one = T::one();
    let t = ((one + a * a) / gap).sqrt();
    let root = a * ((one + b * b) / gap).sqrt();
    // ln(t + root) = ln_1p((t - 1) + root) with t - 1 = root^2 / (t + 1)
    (root * root / (t + one) + root).ln_1p()
}

/// `1 - tanh^2 u tanh^2 v`, the Jacobian determinant `d(x, y)/d(u, v)`.
pub fn jacobian<T: Scalar>(p: MapPoint<T>) -> T {
    let tu = p.u.tanh();
    let tv = p.v.tanh();
    let prod = tu * tv;
    (T::one() - prod) * (T::one() + prod)
}

/// Rotation `u = (X - Y)/sqrt 2`, `v = (X + Y)/sqrt 2`.
pub fn rotate<T: Scalar>(p: RotatedPoint<T>) -> MapPoint<T> {
    let s = T::FRAC_1_SQRT_2();
    MapPoint {
        u: (p.x - p.y) * s,
        v: (p.x + p.y) * s,
    }
}

/// `ln(tanh z)` for `z > 0`, accurate where `tanh z` rounds to 1.
pub fn ln_tanh<T: Scalar>(z: T) -> T {
    // tanh z = 1 - 2/(e^{2z} + 1)
    let two = T::lit(2.0);
    (-two / ((z + z).exp() + T::one())).ln_1p()
}

/// The upper boundary `v = f(u)` in rotated coordinates:
/// `Y = h(X) = -(sqrt 2 / 2) ln tanh(X / sqrt 2)`, for `X > 0`.
pub fn h_curve<T: Scalar>(x: T) -> Result<T> {
    if !(x.is_finite() && x > T::zero()) {
        return Err(Error::domain("h_curve", format!("requires X > 0, got {x}")));
    }
    Ok(-T::FRAC_1_SQRT_2() * ln_tanh(x * T::FRAC_1_SQRT_2()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALPHA: f64 = 0.881_373_587_019_543;

    #[test]
    fn forward_anchor_points() {
        let q = forward(MapPoint::new(0.0_f64, 0.0)).unwrap();
        assert_eq!(q, SquarePoint::new(0.0, 0.0));
        let q = forward(MapPoint::new(const_alpha::<f64>(), 0.0)).unwrap();
        assert!((q.x - 1.0).abs() < 1e-15 && q.y == 0.0);
    }

    #[test]
    fn forward_rejects_points_outside_region() {
        assert!(forward(MapPoint::new(0.0_f64, 1.0)).is_err());
        assert!(forward(MapPoint::new(2.0_f64, 0.1)).is_err());
        assert!(forward(MapPoint::new(-0.1_f64, 0.1)).is_err());
        assert!(forward(MapPoint::new(f64::NAN, 0.1)).is_err());
    }

    #[test]
    fn inverse_anchor_points() {
        assert_eq!(
            inverse(SquarePoint::new(0.0_f64, 0.0)).unwrap(),
            MapPoint::new(0.0, 0.0)
        );
        let p = inverse(SquarePoint::new(1.0_f64, 0.0)).unwrap();
        assert!((p.u - ALPHA).abs() < 1e-15 && p.v == 0.0);
        assert!(inverse(SquarePoint::new(1.0_f64, 1.0)).is_err());
        assert!(inverse(SquarePoint::new(1.5_f64, 0.0)).is_err());
    }

    #[test]
    fn round_trip_fixed_point() {
        let p = MapPoint::new(0.5_f64, 0.3);
        let back = inverse(forward(p).unwrap()).unwrap();
        assert!((back.u - 0.5).abs() < 1e-12 && (back.v - 0.3).abs() < 1e-12);
    }

    #[test]
    fn jacobian_at_origin() {
        assert_eq!(jacobian(MapPoint::new(0.0_f64, 0.0)), 1.0);
    }

    #[test]
    fn curve_anchors() {
        assert!((curve_f(0.0_f64).unwrap() - ALPHA).abs() < 1e-15);
        assert!(curve_g(const_alpha::<f64>()).unwrap().abs() < 1e-7);
        let back = curve_g(curve_f(1.7_f64).unwrap()).unwrap();
        assert!((back - 1.7).abs() < 1e-13);
        assert!(curve_g(0.5_f64).is_err());
        assert!(curve_f(-0.5_f64).is_err());
    }

    #[test]
    fn curve_g_branches_agree_at_switch() {
        let direct = acosh_log(20.0_f64.sinh()).unwrap();
        let stable = 20.0 - u_minus_g(20.0_f64).unwrap();
        assert!((direct - stable).abs() < 1e-13);
    }

    #[test]
    fn cancellation_safe_differences_at_large_u() {
        for u in [40.0_f64, 200.0, 300.0] {
            let f = f_minus_u(u);
            let g = u_minus_g(u).unwrap();
            assert!(f > 0.0 && f.is_finite(), "f_minus_u({u}) = {f}");
            assert!(g > 0.0 && g.is_finite(), "u_minus_g({u}) = {g}");
        }
        // past the underflow of e^{-2u} both are flushed to zero, never NaN
        for u in [800.0_f64, 1e4] {
            assert_eq!(f_minus_u(u), 0.0);
            assert_eq!(u_minus_g(u).unwrap(), 0.0);
        }
        // asinh(cosh u) - u ~ 2 e^{-2u} and u - acosh(sinh u) ~ 2 e^{-2u}
        let u = 40.0_f64;
        let lead = 2.0 * (-2.0 * u).exp();
        assert!((f_minus_u(u) / lead - 1.0).abs() < 1e-12);
        assert!((u_minus_g(u).unwrap() / lead - 1.0).abs() < 1e-12);
    }

    #[test]
    fn differences_match_naive_forms_at_small_u() {
        for u in [0.9_f64, 1.3, 2.0, 4.0] {
            assert!((f_minus_u(u) - (u.cosh().asinh() - u)).abs() < 1e-14);
            assert!((u_minus_g(u).unwrap() - (u - u.sinh().acosh())).abs() < 1e-14);
        }
        assert!((u_minus_g(const_alpha::<f64>()).unwrap() - ALPHA).abs() < 1e-15);
    }

    #[test]
    fn rotation_and_h_curve() {
        let p = rotate(RotatedPoint::new(2.0_f64.sqrt(), 0.0));
        assert!((p.u - 1.0).abs() < 1e-15 && (p.v - 1.0).abs() < 1e-15);

        let x0 = ALPHA / 2.0_f64.sqrt();
        assert!((h_curve(x0).unwrap() - x0).abs() < 1e-15);
        let p = rotate(RotatedPoint::new(x0, x0));
        assert!(p.u.abs() < 1e-15 && (p.v - curve_f(0.0).unwrap()).abs() < 1e-15);

        for x in [1.0_f64, 2.0, 5.0] {
            let p = rotate(RotatedPoint::new(x, h_curve(x).unwrap()));
            assert!((p.v.sinh() - p.u.cosh()).abs() < 1e-12);
        }
        assert!(h_curve(0.0_f64).is_err());
        assert!(h_curve(-1.0_f64).is_err());
    }

    #[test]
    fn ln_tanh_tail_is_not_flushed() {
        let z = 30.0_f64;
        assert!(ln_tanh(z) < 0.0);
        assert!((ln_tanh(z) / (-2.0 * (-2.0 * z).exp()) - 1.0).abs() < 1e-12);
        assert!((ln_tanh(0.7_f64) - 0.7_f64.tanh().ln()).abs() < 1e-15);
    }

    #[test]
    fn acosh_clamp() {
        assert_eq!(acosh_log(1.0 - 1e-15_f64).unwrap(), 0.0);
        assert!(acosh_log(0.99_f64).is_err());
    }

    #[test]
    fn single_precision_map() {
        let p = MapPoint::new(0.5_f32, 0.3);
        let back = inverse(forward(p).unwrap()).unwrap();
        assert!((back.u - 0.5).abs() < 1e-5 && (back.v - 0.3).abs() < 1e-5);
    }
}
