//! Composable descriptors for identity sides: named points, integrands,
//! terms and rational linear combinations of terms.

use std::f64::consts::{FRAC_1_SQRT_2, LN_2, PI, SQRT_2};
use std::fmt;

use crate::change_of_variables::{f_minus_u, ln_tanh, u_minus_g};
use crate::quadrature::{integrate_finite, integrate_semi_infinite, integrate_unit_square};
use crate::special_functions::{const_alpha, li2, odd_reciprocal_squares, rogers_l, zeta_ref};
use crate::{QuadConfig, QuadResult, Real, Result};

/// Named real constants used as limits and arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Point {
    Zero,
    One,
    Half,
    NegHalf,
    ThreeHalves,
    Alpha,
    HalfAlpha,
    Sqrt2,
    HalfSqrt2,
    Sqrt2Minus1,
    OneMinusSqrt2,
    TwoMinusSqrt2,
    OneMinusInvSqrt2,
}

impl Point {
    pub fn value(self) -> Real {
        match self {
            Point::Zero => 0.0,
            Point::One => 1.0,
            Point::Half => 0.5,
            Point::NegHalf => -0.5,
            Point::ThreeHalves => 1.5,
            Point::Alpha => const_alpha(),
            Point::HalfAlpha => 0.5 * const_alpha::<Real>(),
            Point::Sqrt2 => SQRT_2,
            Point::HalfSqrt2 => FRAC_1_SQRT_2,
            Point::Sqrt2Minus1 => SQRT_2 - 1.0,
            Point::OneMinusSqrt2 => 1.0 - SQRT_2,
            Point::TwoMinusSqrt2 => 2.0 - SQRT_2,
            Point::OneMinusInvSqrt2 => 1.0 - FRAC_1_SQRT_2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Point::Zero => "0",
            Point::One => "1",
            Point::Half => "1/2",
            Point::NegHalf => "-1/2",
            Point::ThreeHalves => "3/2",
            Point::Alpha => "α",
            Point::HalfAlpha => "α/2",
            Point::Sqrt2 => "√2",
            Point::HalfSqrt2 => "√2/2",
            Point::Sqrt2Minus1 => "√2-1",
            Point::OneMinusSqrt2 => "1-√2",
            Point::TwoMinusSqrt2 => "2-√2",
            Point::OneMinusInvSqrt2 => "1-1/√2",
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// One-dimensional integrands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LineIntegrand {
    /// `asinh(cosh u) - u`
    FMinusU,
    /// `u - acosh(sinh u)`
    UMinusG,
    /// `ln(tanh z)`
    LnTanh,
    /// `ln t / (1 - t^2)`
    LogOverOneMinusSquare,
    /// `ln t / (1 - t)`
    LogOverOneMinus,
    /// `ln t / (1 + t)`
    LogOverOnePlus,
    /// `atanh(y) / y`
    AtanhOverY,
    /// `arctan(u / sqrt(2 - u^2)) / sqrt(2 - u^2)`
    RotatedLower,
    /// `arctan((sqrt 2 - u) / sqrt(2 - u^2)) / sqrt(2 - u^2)`
    RotatedUpper,
}

impl LineIntegrand {
    pub fn eval(self, t: Real) -> Real {
        match self {
            LineIntegrand::FMinusU => f_minus_u(t),
            LineIntegrand::UMinusG => u_minus_g(t).unwrap_or(Real::NAN),
            LineIntegrand::LnTanh => ln_tanh(t),
            LineIntegrand::LogOverOneMinusSquare => t.ln() / ((1.0 - t) * (1.0 + t)),
            LineIntegrand::LogOverOneMinus => t.ln() / (1.0 - t),
            LineIntegrand::LogOverOnePlus => t.ln() / (1.0 + t),
            LineIntegrand::AtanhOverY => t.atanh() / t,
            LineIntegrand::RotatedLower => {
                let root = ((SQRT_2 - t) * (SQRT_2 + t)).sqrt();
                (t / root).atan() / root
            }
            LineIntegrand::RotatedUpper => {
                // (sqrt2 - u)/sqrt(2 - u^2) = sqrt((sqrt2 - u)/(sqrt2 + u))
                let near = SQRT_2 - t;
                let far = SQRT_2 + t;
                (near / far).sqrt().atan() / (near * far).sqrt()
            }
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            LineIntegrand::FMinusU => "asinh(cosh u) - u",
            LineIntegrand::UMinusG => "u - acosh(sinh u)",
            LineIntegrand::LnTanh => "ln(tanh u)",
            LineIntegrand::LogOverOneMinusSquare => "ln t/(1-t²)",
            LineIntegrand::LogOverOneMinus => "ln t/(1-t)",
            LineIntegrand::LogOverOnePlus => "ln t/(1+t)",
            LineIntegrand::AtanhOverY => "atanh(t)/t",
            LineIntegrand::RotatedLower => "arctan(u/√(2-u²))/√(2-u²)",
            LineIntegrand::RotatedUpper => "arctan((√2-u)/√(2-u²))/√(2-u²)",
        }
    }
}

/// Integrands on the unit square, called as `F(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SquareIntegrand {
    /// `1 / (1 - x^2 y^2)`
    OddKernel,
    /// `1 / (1 - x y)`
    Kernel,
    /// `ln(x y) / (1 - x^2 y^2)`
    LogXYOverOddKernel,
    /// `ln x / (1 - x^2 y^2)`
    LogXOverOddKernel,
    /// `ln(x y) / (1 - x y)`
    LogXYOverKernel,
    /// `ln(1 - x y) / (1 - x y)`
    LogOneMinusXYOverKernel,
}

impl SquareIntegrand {
    pub fn eval(self, x: Real, y: Real) -> Real {
        let xy = x * y;
        let odd = (1.0 - xy) * (1.0 + xy);
        match self {
            SquareIntegrand::OddKernel => 1.0 / odd,
            SquareIntegrand::Kernel => 1.0 / (1.0 - xy),
            // ln x + ln y: x y may underflow near the axes
            SquareIntegrand::LogXYOverOddKernel => (x.ln() + y.ln()) / odd,
            SquareIntegrand::LogXOverOddKernel => x.ln() / odd,
            SquareIntegrand::LogXYOverKernel => (x.ln() + y.ln()) / (1.0 - xy),
            SquareIntegrand::LogOneMinusXYOverKernel => (-xy).ln_1p() / (1.0 - xy),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            SquareIntegrand::OddKernel => "1/(1-x²y²)",
            SquareIntegrand::Kernel => "1/(1-xy)",
            SquareIntegrand::LogXYOverOddKernel => "ln(xy)/(1-x²y²)",
            SquareIntegrand::LogXOverOddKernel => "ln x/(1-x²y²)",
            SquareIntegrand::LogXYOverKernel => "ln(xy)/(1-xy)",
            SquareIntegrand::LogOneMinusXYOverKernel => "ln(1-xy)/(1-xy)",
        }
    }
}

/// Closed-form constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constant {
    One,
    PiSquared,
    AlphaSquared,
    Ln2Squared,
}

impl Constant {
    pub fn value(self) -> Real {
        match self {
            Constant::One => 1.0,
            Constant::PiSquared => PI * PI,
            Constant::AlphaSquared => {
                let a: Real = const_alpha();
                a * a
            }
            Constant::Ln2Squared => LN_2 * LN_2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Constant::One => "1",
            Constant::PiSquared => "π²",
            Constant::AlphaSquared => "α²",
            Constant::Ln2Squared => "ln²2",
        }
    }
}

/// A single evaluable quantity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Term {
    Const(Constant),
    /// `ln(a) ln(b)`
    LnProduct(Point, Point),
    Li2(Point),
    Rogers(Point),
    Zeta(u32),
    /// `sum_{n=0}^{N} 1/(2n+1)^2` plus its Euler–Maclaurin tail.
    OddSquareSeries(u64),
    /// Signed integral from `from` to `to`.
    Interval {
        integrand: LineIntegrand,
        from: Point,
        to: Point,
    },
    HalfLine {
        integrand: LineIntegrand,
        from: Point,
    },
    UnitSquare(SquareIntegrand),
}

/// Value of a term together with the quadrature bookkeeping behind it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TermValue {
    pub value: Real,
    pub evaluations: usize,
    pub converged: bool,
    pub error_bound: Real,
}

impl TermValue {
    fn exact(value: Real) -> Self {
        TermValue {
            value,
            evaluations: 0,
            converged: true,
            error_bound: 0.0,
        }
    }

    fn from_quad(r: QuadResult, sign: Real) -> Self {
        TermValue {
            value: sign * r.value,
            evaluations: r.evaluations,
            converged: r.converged,
            error_bound: r.error_bound,
        }
    }
}

impl Term {
    pub fn evaluate(&self, cfg: &QuadConfig) -> Result<TermValue> {
        Ok(match *self {
            Term::Const(c) => TermValue::exact(c.value()),
            Term::LnProduct(a, b) => TermValue::exact(a.value().ln() * b.value().ln()),
            Term::Li2(p) => TermValue::exact(li2(p.value())?.value),
            Term::Rogers(p) => TermValue::exact(rogers_l(p.value())?),
            Term::Zeta(s) => TermValue::exact(zeta_ref(s)?),
            Term::OddSquareSeries(n) => {
                let (partial, tail) = odd_reciprocal_squares::<Real>(n);
                TermValue::exact(partial + tail)
            }
            Term::Interval {
                integrand,
                from,
                to,
            } => {
                let (a, b) = (from.value(), to.value());
                let (lo, hi, sign) = if a <= b { (a, b, 1.0) } else { (b, a, -1.0) };
                let r = integrate_finite(|t| integrand.eval(t), lo, hi, cfg)?;
                TermValue::from_quad(r, sign)
            }
            Term::HalfLine { integrand, from } => {
                let r = integrate_semi_infinite(|t| integrand.eval(t), from.value(), cfg)?;
                TermValue::from_quad(r, 1.0)
            }
            Term::UnitSquare(integrand) => {
                let r = integrate_unit_square(|x, y| integrand.eval(x, y), cfg)?;
                TermValue::from_quad(r, 1.0)
            }
        })
    }

    pub fn uses_quadrature(&self) -> bool {
        matches!(
            self,
            Term::Interval { .. } | Term::HalfLine { .. } | Term::UnitSquare(_)
        )
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Const(c) => f.write_str(c.symbol()),
            Term::LnProduct(a, b) if a == b => write!(f, "ln²({a})"),
            Term::LnProduct(a, b) => write!(f, "ln({a})·ln({b})"),
            Term::Li2(p) => write!(f, "Li₂({p})"),
            Term::Rogers(p) => write!(f, "L({p})"),
            Term::Zeta(s) => write!(f, "ζ({s})"),
            Term::OddSquareSeries(n) => write!(f, "Σ_(n=0..{n}) 1/(2n+1)² + tail"),
            Term::Interval {
                integrand,
                from,
                to,
            } => write!(f, "∫_[{from},{to}] {} dt", integrand.symbol()),
            Term::HalfLine { integrand, from } => {
                write!(f, "∫_[{from},∞) {} du", integrand.symbol())
            }
            Term::UnitSquare(integrand) => write!(f, "∫∫_[0,1]² {} dx dy", integrand.symbol()),
        }
    }
}

/// Exact rational coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    pub num: i64,
    pub den: i64,
}

impl Ratio {
    pub const fn new(num: i64, den: i64) -> Self {
        Ratio { num, den }
    }

    pub fn value(self) -> Real {
        self.num as Real / self.den as Real
    }
}

/// `sum_i c_i * term_i`; the empty combination is zero.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Combination(pub Vec<(Ratio, Term)>);

impl Combination {
    pub fn zero() -> Self {
        Combination(Vec::new())
    }

    pub fn term(t: Term) -> Self {
        Combination(vec![(Ratio::new(1, 1), t)])
    }

    /// Appends `num/den * t`.
    pub fn plus(mut self, num: i64, den: i64, t: Term) -> Self {
        self.0.push((Ratio::new(num, den), t));
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = &Term> {
        self.0.iter().map(|(_, t)| t)
    }

    pub fn evaluate(&self, cfg: &QuadConfig) -> Result<TermValue> {
        let mut out = TermValue::exact(0.0);
        for (c, t) in &self.0 {
            let v = t.evaluate(cfg)?;
            let c = c.value();
            out.value += c * v.value;
            out.evaluations += v.evaluations;
            out.converged &= v.converged;
            out.error_bound += c.abs() * v.error_bound;
        }
        Ok(out)
    }
}

impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, t)) in self.0.iter().enumerate() {
            let negative = c.num < 0;
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let num = c.num.abs();
            match (num, c.den) {
                (1, 1) => {}
                (n, 1) => write!(f, "{n}·")?,
                (n, d) => write!(f, "({n}/{d})·")?,
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}
