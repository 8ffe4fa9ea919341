//! Tanh-sinh (double-exponential) quadrature.
//!
//! Every rule here samples only the open interval, so integrable endpoint
//! singularities and the `(1, 1)` corner of the unit square are never
//! evaluated. Levels are nested: each halving of the step reuses every
//! previous evaluation, and the error estimate is the difference between the
//! last two levels.

use std::cell::Cell;

use crate::{Error, Result, Scalar};

mod nodes;

pub use nodes::{Node, NodeTable};

/// Levels computed before the level-difference test is trusted.
const MIN_LEVEL: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig<T> {
    /// Absolute tolerance on the level difference.
    pub abs_tol: T,
    pub max_evaluations: usize,
    /// Maximum number of step halvings.
    pub max_depth: u32,
}

impl<T: Scalar> Default for QuadConfig<T> {
    fn default() -> Self {
        QuadConfig {
            abs_tol: T::lit(1e-12).max(T::epsilon() * T::lit(16.0)),
            max_evaluations: 10_000_000,
            max_depth: 60,
        }
    }
}

impl<T: Scalar> QuadConfig<T> {
    pub fn with_tol(mut self, abs_tol: T) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    pub fn with_max_evaluations(mut self, max_evaluations: usize) -> Self {
        self.max_evaluations = max_evaluations;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > T::zero() && self.abs_tol.is_finite()) {
            return Err(Error::Config(format!(
                "abs_tol must be positive and finite, got {}",
                self.abs_tol
            )));
        }
        if self.max_evaluations == 0 {
            return Err(Error::Config("max_evaluations must be positive".into()));
        }
        if self.max_depth == 0 {
            return Err(Error::Config("max_depth must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<T> {
    pub value: T,
    /// Absolute error estimate; infinite when no level completed.
    pub error_bound: T,
    pub evaluations: usize,
    pub converged: bool,
}

/// Evaluation counter shared by nested integrations.
struct Budget {
    max: usize,
    used: Cell<usize>,
}

impl Budget {
    fn new(max: usize) -> Self {
        Budget {
            max,
            used: Cell::new(0),
        }
    }

    fn remaining(&self) -> usize {
        self.max.saturating_sub(self.used.get())
    }
}

/// A sample point with its distances to both endpoints, which are exact even
/// when `x` itself rounds towards an endpoint. `weight` is the node's
/// weight without the step factor.
#[derive(Debug, Clone, Copy)]
struct Sample<T> {
    x: T,
    from_a: T,
    to_b: T,
    weight: T,
}

/// Core level loop on `(a, b)`. Converges once the level difference plus
/// `extra_error(step)` is within `tol`.
fn tanh_sinh<T, F>(
    mut f: F,
    a: T,
    b: T,
    tol: T,
    max_depth: u32,
    budget: &Budget,
    extra_error: &dyn Fn(T) -> T,
) -> Result<QuadResult<T>>
where
    T: Scalar,
    F: FnMut(Sample<T>) -> Result<T>,
{
    let table = T::node_table();
    let half_width = (b - a) * T::lit(0.5);
    let width = b - a;
    let start = budget.used.get();

    let mut eval = |s: Sample<T>| -> Result<T> {
        let v = f(s)?;
        if !v.is_finite() {
            return Err(Error::Evaluation {
                at: s.x.to_f64_lossy(),
                value: format!("{v}"),
            });
        }
        budget.used.set(budget.used.get() + 1);
        Ok(s.weight * v)
    };

    let mut raw = T::zero();
    let mut step = T::one();
    let mut previous: Option<T> = None;
    let mut estimate = T::zero();
    let mut error = T::infinity();

    for level in 0..=max_depth as usize {
        let nodes = table.level(level);
        let cost = 2 * nodes.len();
        if cost > budget.remaining() {
            break;
        }
        for node in nodes.iter() {
            if node.t == T::zero() {
                let s = Sample {
                    x: a + half_width,
                    from_a: half_width,
                    to_b: half_width,
                    weight: half_width * node.weight,
                };
                raw = raw + eval(s)?;
                continue;
            }
            let offset = half_width * node.complement;
            let left = a + offset;
            if left > a && left < b {
                let s = Sample {
                    x: left,
                    from_a: offset,
                    to_b: width - offset,
                    weight: half_width * node.weight,
                };
                raw = raw + eval(s)?;
            }
            let right = b - offset;
            if right < b && right > a {
                let s = Sample {
                    x: right,
                    from_a: width - offset,
                    to_b: offset,
                    weight: half_width * node.weight,
                };
                raw = raw + eval(s)?;
            }
        }
        estimate = raw * step;
        if let Some(prev) = previous {
            error = (estimate - prev).abs() + extra_error(step);
            if level >= MIN_LEVEL && error <= tol {
                return Ok(QuadResult {
                    value: estimate,
                    error_bound: error,
                    evaluations: budget.used.get() - start,
                    converged: true,
                });
            }
        }
        previous = Some(estimate);
        step = step * T::lit(0.5);
    }

    Ok(QuadResult {
        value: estimate,
        error_bound: error,
        evaluations: budget.used.get() - start,
        converged: false,
    })
}

fn check_interval<T: Scalar>(op: &'static str, a: T, b: T) -> Result<()> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::domain(
            op,
            format!("endpoints must be finite, got [{a}, {b}]"),
        ));
    }
    if a >= b {
        return Err(Error::domain(op, format!("requires a < b, got [{a}, {b}]")));
    }
    Ok(())
}

/// Integrates `f` over `(a, b)`. Endpoints are never sampled.
///
/// A non-finite integrand value at an interior node is an error;
/// running out of evaluations or depth yields `converged = false`.
pub fn integrate_finite<T, F>(mut f: F, a: T, b: T, cfg: &QuadConfig<T>) -> Result<QuadResult<T>>
where
    T: Scalar,
    F: FnMut(T) -> T,
{
    cfg.validate()?;
    check_interval("integrate_finite", a, b)?;
    let budget = Budget::new(cfg.max_evaluations);
    tanh_sinh(
        |s| Ok(f(s.x)),
        a,
        b,
        cfg.abs_tol,
        cfg.max_depth,
        &budget,
        &|_| T::zero(),
    )
}

/// Default length of the half-line kept by [`integrate_semi_infinite`],
/// measured from the lower limit: `0.2 * |ln(min_positive)|`, about 141.7
/// for `f64`.
pub fn default_tail_span<T: Scalar>() -> T {
    -T::min_positive_value().ln() * T::lit(0.2)
}

/// Integrates `f` over `(a, inf)` for integrands decaying at least like
/// `e^-u`, via `u = a - ln(1 - t)` onto `t in (0, 1)`.
pub fn integrate_semi_infinite<T, F>(f: F, a: T, cfg: &QuadConfig<T>) -> Result<QuadResult<T>>
where
    T: Scalar,
    F: FnMut(T) -> T,
{
    integrate_semi_infinite_with_span(f, a, default_tail_span(), cfg)
}

/// As [`integrate_semi_infinite`], with nodes beyond `a + span` dropped.
pub fn integrate_semi_infinite_with_span<T, F>(
    mut f: F,
    a: T,
    span: T,
    cfg: &QuadConfig<T>,
) -> Result<QuadResult<T>>
where
    T: Scalar,
    F: FnMut(T) -> T,
{
    cfg.validate()?;
    if !a.is_finite() {
        return Err(Error::domain(
            "integrate_semi_infinite",
            format!("lower limit must be finite, got {a}"),
        ));
    }
    if !(span.is_finite() && span > T::zero()) {
        return Err(Error::domain(
            "integrate_semi_infinite",
            format!("span must be positive, got {span}"),
        ));
    }
    let budget = Budget::new(cfg.max_evaluations);
    tanh_sinh(
        |s| {
            // u - a = -ln(1 - t), taken from whichever distance is exact
            let offset = if s.from_a <= T::lit(0.5) {
                -(-s.from_a).ln_1p()
            } else {
                -s.to_b.ln()
            };
            if offset > span {
                return Ok(T::zero());
            }
            Ok(f(a + offset) / s.to_b)
        },
        T::zero(),
        T::one(),
        cfg.abs_tol,
        cfg.max_depth,
        &budget,
        &|_| T::zero(),
    )
}

/// Iterated rule on the open unit square: outer over `y`, inner over `x`,
/// so `f` is called as `f(x, y)`.
///
/// Each inner integral gets a tolerance inversely proportional to the weight
/// of its outer node, so that the weighted inner errors sum to at most half
/// of `abs_tol`; near the corner, where double precision cannot resolve the
/// inner integrand, the outer weights are tiny. The reported error bound is
/// the outer level difference plus the outer-weighted sum of inner error
/// bounds, and any unconverged inner integral makes the result unconverged.
pub fn integrate_unit_square<T, F>(f: F, cfg: &QuadConfig<T>) -> Result<QuadResult<T>>
where
    T: Scalar,
    F: Fn(T, T) -> T,
{
    cfg.validate()?;
    let budget = Budget::new(cfg.max_evaluations);
    // sum over outer nodes of step * weight is about 2 t_max
    let spread = T::lit(4.0) * T::node_table().t_max();
    let weighted_inner = Cell::new(T::zero());
    let inner_converged = Cell::new(true);

    let outer = tanh_sinh(
        |sy| {
            let y = sy.x;
            let inner_tol = (cfg.abs_tol / (spread * sy.weight)).min(T::max_value());
            let inner = tanh_sinh(
                |sx| Ok(f(sx.x, y)),
                T::zero(),
                T::one(),
                inner_tol,
                cfg.max_depth,
                &budget,
                &|_| T::zero(),
            )?;
            if !inner.converged {
                inner_converged.set(false);
            }
            weighted_inner.set(weighted_inner.get() + sy.weight * inner.error_bound);
            Ok(inner.value)
        },
        T::zero(),
        T::one(),
        cfg.abs_tol,
        cfg.max_depth,
        &budget,
        &|step| step * weighted_inner.get(),
    )?;

    Ok(QuadResult {
        value: outer.value,
        error_bound: outer.error_bound,
        evaluations: budget.used.get(),
        converged: outer.converged && inner_converged.get(),
    })
}
