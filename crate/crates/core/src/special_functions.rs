//! Real dilogarithm, Rogers dilogarithm and the reference constants used as
//! right-hand sides by the identity registry.
//!
//! `li2` evaluates the power series `sum x^k / k^2` only on `|x| <= 1/2` and
//! reaches every other argument in `(-inf, 1]` through the two functional
//! equations
//!
//! ```text
//! reflection: Li2(x) = pi^2/6 - ln(x) ln(1-x) - Li2(1-x)
//! Landen:     Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2
//! ```

use crate::{Error, Result, Scalar};

/// Which functional equations were used to bring the argument into the
/// series disc `|x| <= 1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionPath {
    DirectSeries,
    Landen,
    Reflection,
    /// Landen maps `x < -1` to `(1/2, 1)`, which is then reflected.
    ReflectionThenLanden,
}

impl ReductionPath {
    pub fn as_str(self) -> &'static str {
        match self {
            ReductionPath::DirectSeries => "direct_series",
            ReductionPath::Landen => "landen",
            ReductionPath::Reflection => "reflection",
            ReductionPath::ReflectionThenLanden => "reflection_then_landen",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Li2Value<T> {
    pub value: T,
    /// Series terms summed after argument reduction.
    pub terms_used: u32,
    pub reduction_path: ReductionPath,
}

/// Terms needed so that the geometric tail bound
/// `|x|^(K+1) / ((K+1)^2 (1-|x|))` falls below `eps/32`.
fn series_terms<T: Scalar>(ax: T) -> u32 {
    let bound = T::epsilon() / T::lit(32.0);
    let denom = T::one() - ax;
    let mut k: u32 = 0;
    let mut pow = ax;
    loop {
        let next = T::from_u32(k + 1).unwrap();
        if pow / (next * next * denom) <= bound {
            return k;
        }
        k += 1;
        pow = pow * ax;
    }
}

/// `sum_{k=1}^{K} x^k / k^2` by Horner's rule, for `|x| <= 1/2`.
fn li2_series<T: Scalar>(x: T) -> (T, u32) {
    let k_max = series_terms(x.abs());
    if k_max == 0 {
        return (T::zero(), 0);
    }
    let inv_sq = |k: u32| {
        let k = T::from_u32(k).unwrap();
        T::one() / (k * k)
    };
    let mut acc = inv_sq(k_max);
    for k in (1..k_max).rev() {
        acc = inv_sq(k) + x * acc;
    }
    (x * acc, k_max)
}

/// `Li2(x)` on `1/2 < x <= 1` via reflection; `complement` is `1 - x`
/// computed exactly by the caller.
fn li2_reflected<T: Scalar>(ln_x: T, complement: T) -> (T, u32) {
    let pi2_6 = T::PI() * T::PI() / T::lit(6.0);
    if complement == T::zero() {
        return (pi2_6, 0);
    }
    let (tail, terms) = li2_series(complement);
    (pi2_6 - ln_x * complement.ln() - tail, terms)
}

/// Real dilogarithm `Li2(x)` for `x <= 1`.
///
/// Relative accuracy is about one ulp times a small constant on the whole
/// real branch; `x = 1` returns `pi^2/6` directly.
pub fn li2<T: Scalar>(x: T) -> Result<Li2Value<T>> {
    if !x.is_finite() {
        return Err(Error::domain(
            "li2",
            format!("argument must be finite, got {x}"),
        ));
    }
    if x > T::one() {
        return Err(Error::domain(
            "li2",
            format!("real branch requires x <= 1, got {x}"),
        ));
    }
    let half = T::lit(0.5);
    let (value, terms_used, reduction_path) = if x.abs() <= half {
        let (v, n) = li2_series(x);
        (v, n, ReductionPath::DirectSeries)
    } else if x > half {
        // 1 - x is exact here (Sterbenz)
        let complement = T::one() - x;
        let (v, n) = li2_reflected((-complement).ln_1p(), complement);
        (v, n, ReductionPath::Reflection)
    } else {
        // x < -1/2: y = x/(x-1) = -x/(1-x) lies in (1/3, 1)
        let ln_one_minus_x = (-x).ln_1p();
        let landen_term = ln_one_minus_x * ln_one_minus_x * half;
        let y = -x / (T::one() - x);
        if y <= half {
            let (v, n) = li2_series(y);
            (-v - landen_term, n, ReductionPath::Landen)
        } else {
            // 1 - y = 1/(1-x); ln y = ln(-x) - ln(1-x)
            let complement = T::one() / (T::one() - x);
            let ln_y = (-x).ln() - ln_one_minus_x;
            let (v, n) = li2_reflected(ln_y, complement);
            (-v - landen_term, n, ReductionPath::ReflectionThenLanden)
        }
    };
    Ok(Li2Value {
        value,
        terms_used,
        reduction_path,
    })
}

/// Normalised Rogers dilogarithm `L(x) = (6/pi^2) [Li2(x) + ln(x) ln(1-x) / 2]`
/// on `0 < x < 1`. It satisfies `L(x) + L(1-x) = 1`.
pub fn rogers_l<T: Scalar>(x: T) -> Result<T> {
    if !(x > T::zero() && x < T::one()) {
        return Err(Error::domain(
            "rogers_l",
            format!("argument must lie in (0, 1), got {x}"),
        ));
    }
    let li = li2(x)?.value;
    let log_term = x.ln() * (-x).ln_1p() * T::lit(0.5);
    Ok(T::lit(6.0) / (T::PI() * T::PI()) * (li + log_term))
}

/// `alpha = asinh(1) = ln(1 + sqrt 2)`, where the lower boundary curve of
/// the mapped region meets the `u` axis.
pub fn const_alpha<T: Scalar>() -> T {
    T::SQRT_2().ln_1p()
}

/// Number of direct terms used for `zeta(3)`; the first omitted
/// Euler–Maclaurin term `1/(4N^4)` is below `1e-15` for this `N`.
pub const ZETA3_TERMS: u32 = 5624;

/// Reference zeta values: `zeta(2) = pi^2/6` and `zeta(3)` by a direct sum
/// with Euler–Maclaurin tail correction `1/(2N^2) - 1/(2N^3)`.
pub fn zeta_ref<T: Scalar>(s: u32) -> Result<T> {
    match s {
        2 => Ok(T::PI() * T::PI() / T::lit(6.0)),
        3 => {
            let n = ZETA3_TERMS;
            let mut sum = T::zero();
            for k in (1..=n).rev() {
                let k = T::from_u32(k).unwrap();
                sum = sum + T::one() / (k * k * k);
            }
            let nn = T::from_u32(n).unwrap();
            let half = T::lit(0.5);
            Ok(sum + half / (nn * nn) - half / (nn * nn * nn))
        }
        _ => Err(Error::domain(
            "zeta_ref",
            format!("only s = 2 and s = 3 are supported, got {s}"),
        )),
    }
}

/// Sum of `1/(2n+1)^2` for `n = 0..=terms`, returned as `(partial, tail)`
/// where `tail` is the Euler–Maclaurin estimate of the omitted terms.
pub fn odd_reciprocal_squares<T: Scalar>(terms: u64) -> (T, T) {
    // Neumaier summation, smallest terms first
    let mut sum = T::zero();
    let mut comp = T::zero();
    for n in (0..=terms).rev() {
        let d = T::from_u64(2 * n + 1).unwrap();
        let term = T::one() / (d * d);
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp = comp + ((sum - t) + term);
        } else {
            comp = comp + ((term - t) + sum);
        }
        sum = t;
    }
    // g(n) = (2n+1)^-2 summed over n > terms: integral + g/2 - g'/12
    let m = T::from_u64(2 * terms + 3).unwrap();
    let half = T::lit(0.5);
    let tail = half / m + half / (m * m) + T::lit(4.0) / (T::lit(12.0) * m * m * m);
    (sum + comp, tail)
}
