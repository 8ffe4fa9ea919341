//! Registry of closed-form identities and the machinery that checks them.
//!
//! Each [`Identity`] is a list of [`Part`]s, each pairing two
//! [`Combination`]s of terms. A part passes when `|lhs - rhs|` is within the
//! identity's tolerance and every quadrature behind it converged. A record
//! reports the worst part.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::{Error, QuadConfig, Real, Result};

mod recipe;

pub use recipe::{
    Combination, Constant, LineIntegrand, Point, Ratio, SquareIntegrand, Term, TermValue,
};

/// Tolerance for identities backed by numerical integration.
pub const QUADRATURE_TOLERANCE: Real = 1e-10;
/// Tolerance for identities between dilogarithm values and series.
pub const SPECIAL_FUNCTION_TOLERANCE: Real = 1e-13;

/// Terms in the odd-square partial sum.
pub const ODD_SQUARE_TERMS: u64 = 1_000_000;

/// Where the closed form comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Follows from the other closed forms in the registry.
    Derived,
    /// Quoted from the literature without derivation.
    External,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Part {
    pub label: &'static str,
    pub lhs: Combination,
    pub rhs: Combination,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Identity {
    pub id: &'static str,
    pub description: &'static str,
    /// The closed-form statement being checked.
    pub reference: &'static str,
    pub parts: Vec<Part>,
    pub tolerance: Real,
    pub provenance: Provenance,
}

impl Identity {
    pub fn uses_quadrature(&self) -> bool {
        self.parts
            .iter()
            .flat_map(|p| p.lhs.terms().chain(p.rhs.terms()))
            .any(Term::uses_quadrature)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PartOutcome {
    pub label: &'static str,
    pub lhs: Real,
    pub rhs: Real,
    pub residual: Real,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationRecord {
    pub id: &'static str,
    pub description: &'static str,
    pub reference: &'static str,
    pub provenance: Provenance,
    pub lhs_value: Real,
    pub rhs_value: Real,
    /// `|lhs_value - rhs_value|`, taken from the worst part.
    pub residual: Real,
    pub tolerance: Real,
    pub passed: bool,
    pub converged: bool,
    pub evaluations: usize,
    pub elapsed: Duration,
    pub parts: Vec<PartOutcome>,
    /// Why the record failed, when it did.
    pub diagnostic: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub records: Vec<VerificationRecord>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> usize {
        self.records.iter().filter(|r| r.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.records.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }
}

fn pi2(num: i64, den: i64) -> (i64, i64, Term) {
    (num, den, Term::Const(Constant::PiSquared))
}

fn comb(items: impl IntoIterator<Item = (i64, i64, Term)>) -> Combination {
    items
        .into_iter()
        .fold(Combination::zero(), |c, (n, d, t)| c.plus(n, d, t))
}

fn single(label: &'static str, lhs: Combination, rhs: Combination) -> Vec<Part> {
    vec![Part { label, lhs, rhs }]
}

fn half_line(integrand: LineIntegrand, from: Point) -> Term {
    Term::HalfLine { integrand, from }
}

fn interval(integrand: LineIntegrand, from: Point, to: Point) -> Term {
    Term::Interval {
        integrand,
        from,
        to,
    }
}

fn zeta3(num: i64, den: i64) -> Combination {
    comb([(num, den, Term::Zeta(3))])
}

/// All identities, in report order.
pub fn registry() -> Vec<Identity> {
    use LineIntegrand as L;
    use Point as P;
    use SquareIntegrand as Q;

    let q = QUADRATURE_TOLERANCE;
    let s = SPECIAL_FUNCTION_TOLERANCE;
    let derived = |id, description, reference, parts, tolerance| Identity {
        id,
        description,
        reference,
        parts,
        tolerance,
        provenance: Provenance::Derived,
    };
    let external = |id, description, reference, parts| Identity {
        id,
        description,
        reference,
        parts,
        tolerance: q,
        provenance: Provenance::External,
    };
    let alpha_sq = || Term::Const(Constant::AlphaSquared);
    let ln2_sq = || Term::Const(Constant::Ln2Squared);

    vec![
        derived(
            "B1",
            "odd-kernel unit-square integral K",
            "∫∫ 1/(1-x²y²) dx dy over [0,1]² = π²/8",
            single(
                "",
                Combination::term(Term::UnitSquare(Q::OddKernel)),
                comb([pi2(1, 8)]),
            ),
            q,
        ),
        derived(
            "B2",
            "sum over odd reciprocal squares equals (3/4) zeta(2)",
            "Σ_{n≥0} 1/(2n+1)² = (3/4) Σ_{n≥1} 1/n²",
            single(
                "",
                Combination::term(Term::OddSquareSeries(ODD_SQUARE_TERMS)),
                comb([(3, 4, Term::Zeta(2))]),
            ),
            s,
        ),
        derived(
            "A1",
            "Beukers unit-square integral I",
            "∫∫ 1/(1-xy) dx dy over [0,1]² = π²/6",
            single(
                "",
                Combination::term(Term::UnitSquare(Q::Kernel)),
                comb([pi2(1, 6)]),
            ),
            q,
        ),
        derived(
            "A2",
            "the two integrals of the rotated form of I",
            "4∫_0^{√2/2} arctan(u/√(2-u²))/√(2-u²) du = π²/18, \
             4∫_{√2/2}^{√2} arctan((√2-u)/√(2-u²))/√(2-u²) du = π²/9",
            vec![
                Part {
                    label: "lower",
                    lhs: comb([(4, 1, interval(L::RotatedLower, P::Zero, P::HalfSqrt2))]),
                    rhs: comb([pi2(1, 18)]),
                },
                Part {
                    label: "upper",
                    lhs: comb([(4, 1, interval(L::RotatedUpper, P::HalfSqrt2, P::Sqrt2))]),
                    rhs: comb([pi2(1, 9)]),
                },
            ],
            q,
        ),
        derived(
            "T1",
            "area above the diagonal of the mapped region",
            "∫_0^∞ [asinh(cosh u) - u] du = π²/16",
            single(
                "",
                Combination::term(half_line(L::FMinusU, P::Zero)),
                comb([pi2(1, 16)]),
            ),
            q,
        ),
        derived(
            "T2",
            "area below the diagonal beyond u = alpha",
            "∫_α^∞ [u - acosh(sinh u)] du = π²/16 - ln²(1+√2)/2",
            single(
                "",
                Combination::term(half_line(L::UMinusG, P::Alpha)),
                comb([pi2(1, 16), (-1, 2, alpha_sq())]),
            ),
            q,
        ),
        derived(
            "T3",
            "log-tanh integral from the rotated boundary curve",
            "∫_{α/2}^∞ ln(tanh z) dz = ln²(1+√2)/4 - π²/16",
            single(
                "",
                Combination::term(half_line(L::LnTanh, P::HalfAlpha)),
                comb([(1, 4, alpha_sq()), pi2(-1, 16)]),
            ),
            q,
        ),
        derived(
            "T2b",
            "area of the mapped region from its lower half",
            "area(S) = α² + 2∫_α^∞ [u - acosh(sinh u)] du = π²/8",
            single(
                "",
                comb([(1, 1, alpha_sq()), (2, 1, half_line(L::UMinusG, P::Alpha))]),
                comb([pi2(1, 8)]),
            ),
            q,
        ),
        derived(
            "L1",
            "log-tanh integral after t = tanh z",
            "∫_{√2-1}^1 ln t/(1-t²) dt = α²/4 - π²/16",
            single(
                "",
                Combination::term(interval(L::LogOverOneMinusSquare, P::Sqrt2Minus1, P::One)),
                comb([(1, 4, alpha_sq()), pi2(-1, 16)]),
            ),
            q,
        ),
        derived(
            "L2",
            "first helper integral reduces to Li2",
            "∫_1^z ln t/(1-t) dt = Li₂(1-z)",
            [
                ("z=2-√2", P::TwoMinusSqrt2, P::Sqrt2Minus1),
                ("z=1/2", P::Half, P::Half),
                ("z=3/2", P::ThreeHalves, P::NegHalf),
            ]
            .into_iter()
            .map(|(label, z, one_minus_z)| Part {
                label,
                lhs: Combination::term(interval(L::LogOverOneMinus, P::One, z)),
                rhs: Combination::term(Term::Li2(one_minus_z)),
            })
            .collect(),
            q,
        ),
        derived(
            "L3",
            "second helper integral reduces to Li2",
            "∫_z^1 ln t/(1+t) dt = -Li₂(-z) - ln z ln(z+1) - π²/12",
            [
                ("z=√2-1", P::Sqrt2Minus1, P::OneMinusSqrt2, P::Sqrt2),
                ("z=1/2", P::Half, P::NegHalf, P::ThreeHalves),
            ]
            .into_iter()
            .map(|(label, z, minus_z, z_plus_1)| Part {
                label,
                lhs: Combination::term(interval(L::LogOverOnePlus, z, P::One)),
                rhs: comb([
                    (-1, 1, Term::Li2(minus_z)),
                    (-1, 1, Term::LnProduct(z, z_plus_1)),
                    pi2(-1, 12),
                ]),
            })
            .collect(),
            q,
        ),
        derived(
            "D1",
            "two-term dilogarithm identity",
            "Li₂(√2-1) + Li₂(1-1/√2) = π²/8 - ln²(1+√2)/2 - ln²2/8",
            single(
                "",
                comb([
                    (1, 1, Term::Li2(P::Sqrt2Minus1)),
                    (1, 1, Term::Li2(P::OneMinusInvSqrt2)),
                ]),
                comb([pi2(1, 8), (-1, 2, alpha_sq()), (-1, 8, ln2_sq())]),
            ),
            s,
        ),
        derived(
            "D2",
            "Euler reflection at 2-√2 and the resulting difference",
            "Li₂(z) + Li₂(1-z) = π²/6 - ln z ln(1-z) at z = 2-√2; \
             Li₂(√2-1) - Li₂(1-√2) = α²/2 - π²/8 + π²/4 - ln²(√2-1)",
            vec![
                Part {
                    label: "reflection",
                    lhs: comb([
                        (1, 1, Term::Li2(P::TwoMinusSqrt2)),
                        (1, 1, Term::Li2(P::Sqrt2Minus1)),
                    ]),
                    rhs: comb([
                        pi2(1, 6),
                        (-1, 1, Term::LnProduct(P::TwoMinusSqrt2, P::Sqrt2Minus1)),
                    ]),
                },
                Part {
                    label: "difference",
                    lhs: comb([
                        (1, 1, Term::Li2(P::Sqrt2Minus1)),
                        (-1, 1, Term::Li2(P::OneMinusSqrt2)),
                    ]),
                    rhs: comb([
                        (1, 2, alpha_sq()),
                        pi2(-1, 8),
                        pi2(1, 4),
                        (-1, 1, Term::LnProduct(P::Sqrt2Minus1, P::Sqrt2Minus1)),
                    ]),
                },
            ],
            s,
        ),
        derived(
            "D3",
            "Landen's formula at 1-√2",
            "Li₂(1-√2) = -Li₂(1-1/√2) - ln²2/8",
            single(
                "",
                comb([
                    (1, 1, Term::Li2(P::OneMinusSqrt2)),
                    (1, 1, Term::Li2(P::OneMinusInvSqrt2)),
                    (1, 8, ln2_sq()),
                ]),
                Combination::zero(),
            ),
            s,
        ),
        derived(
            "D4",
            "normalised Rogers dilogarithm pair (Bytsko)",
            "L(√2-1) + L(1-1/√2) = 3/4",
            single(
                "",
                comb([
                    (1, 1, Term::Rogers(P::Sqrt2Minus1)),
                    (1, 1, Term::Rogers(P::OneMinusInvSqrt2)),
                ]),
                comb([(3, 4, Term::Const(Constant::One))]),
            ),
            s,
        ),
        external(
            "Z1",
            "zeta(3) from ln(xy) over the odd kernel",
            "∫∫ ln(xy)/(1-x²y²) dx dy over [0,1]² = -(7/4) ζ(3)",
            single(
                "",
                Combination::term(Term::UnitSquare(Q::LogXYOverOddKernel)),
                zeta3(-7, 4),
            ),
        ),
        external(
            "Z2",
            "zeta(3) from ln x over the odd kernel",
            "∫∫ ln x/(1-x²y²) dx dy over [0,1]² = -(7/8) ζ(3)",
            single(
                "",
                Combination::term(Term::UnitSquare(Q::LogXOverOddKernel)),
                zeta3(-7, 8),
            ),
        ),
        external(
            "Z3",
            "zeta(3) from ln(xy) over the Beukers kernel",
            "∫∫ ln(xy)/(1-xy) dx dy over [0,1]² = -2 ζ(3)",
            single(
                "",
                Combination::term(Term::UnitSquare(Q::LogXYOverKernel)),
                zeta3(-2, 1),
            ),
        ),
        external(
            "Z4",
            "zeta(3) from ln(1-xy) over the Beukers kernel",
            "∫∫ ln(1-xy)/(1-xy) dx dy over [0,1]² = -ζ(3)",
            single(
                "",
                Combination::term(Term::UnitSquare(Q::LogOneMinusXYOverKernel)),
                zeta3(-1, 1),
            ),
        ),
        derived(
            "S1",
            "upper-half and lower-half areas of the mapped region agree",
            "2∫_0^∞ [asinh(cosh u) - u] du = α² + 2∫_α^∞ [u - acosh(sinh u)] du",
            single(
                "",
                comb([(2, 1, half_line(L::FMinusU, P::Zero))]),
                comb([(1, 1, alpha_sq()), (2, 1, half_line(L::UMinusG, P::Alpha))]),
            ),
            q,
        ),
    ]
}

/// Looks up an identity by id.
pub fn find(id: &str) -> Result<Identity> {
    registry()
        .into_iter()
        .find(|i| i.id == id)
        .ok_or_else(|| Error::UnknownIdentity {
            id: id.to_string(),
            valid: ids(),
        })
}

pub fn ids() -> Vec<String> {
    registry().iter().map(|i| i.id.to_string()).collect()
}

/// Evaluates one identity. Evaluation failures and unconverged quadrature
/// produce a failed record with a diagnostic instead of an error.
pub fn check(identity: &Identity, cfg: &QuadConfig) -> VerificationRecord {
    let started = Instant::now();
    let mut parts = Vec::with_capacity(identity.parts.len());
    let mut evaluations = 0;
    let mut diagnostic = None;

    for part in &identity.parts {
        let sides = part
            .lhs
            .evaluate(cfg)
            .and_then(|l| part.rhs.evaluate(cfg).map(|r| (l, r)));
        match sides {
            Ok((l, r)) => {
                evaluations += l.evaluations + r.evaluations;
                parts.push(PartOutcome {
                    label: part.label,
                    lhs: l.value,
                    rhs: r.value,
                    residual: (l.value - r.value).abs(),
                    converged: l.converged && r.converged,
                });
            }
            Err(e) => {
                let where_ = if part.label.is_empty() {
                    String::new()
                } else {
                    format!(" [{}]", part.label)
                };
                diagnostic = Some(format!("evaluation failed{where_}: {e}"));
                parts.push(PartOutcome {
                    label: part.label,
                    lhs: Real::NAN,
                    rhs: Real::NAN,
                    residual: Real::NAN,
                    converged: false,
                });
            }
        }
    }

    // worst part: NaN residuals rank above everything
    let worst = parts
        .iter()
        .max_by(|a, b| {
            let key = |p: &PartOutcome| {
                if p.residual.is_nan() {
                    Real::INFINITY
                } else {
                    p.residual
                }
            };
            key(a).total_cmp(&key(b))
        })
        .cloned()
        .expect("identities have at least one part");

    let converged = parts.iter().all(|p| p.converged);
    let within = parts.iter().all(|p| p.residual <= identity.tolerance);
    if diagnostic.is_none() {
        if !converged {
            let which: Vec<_> = parts
                .iter()
                .filter(|p| !p.converged)
                .map(|p| {
                    if p.label.is_empty() {
                        "lhs/rhs"
                    } else {
                        p.label
                    }
                })
                .collect();
            diagnostic = Some(format!(
                "quadrature did not converge ({}) within the evaluation budget",
                which.join(", ")
            ));
        } else if !within {
            diagnostic = Some(format!(
                "residual {:e} exceeds tolerance {:e}",
                worst.residual, identity.tolerance
            ));
        }
    }

    VerificationRecord {
        id: identity.id,
        description: identity.description,
        reference: identity.reference,
        provenance: identity.provenance,
        lhs_value: worst.lhs,
        rhs_value: worst.rhs,
        residual: worst.residual,
        tolerance: identity.tolerance,
        passed: converged && within,
        converged,
        evaluations,
        elapsed: started.elapsed(),
        parts,
        diagnostic,
    }
}

/// Verifies a single identity by id.
pub fn verify(id: &str, cfg: &QuadConfig) -> Result<VerificationRecord> {
    cfg.validate()?;
    Ok(check(&find(id)?, cfg))
}

/// Verifies the given identities (all of them when `ids` is empty),
/// concurrently, reporting in registry order.
pub fn verify_selected(ids: &[String], cfg: &QuadConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let all = registry();
    for id in ids {
        if !all.iter().any(|i| i.id == id) {
            return Err(Error::UnknownIdentity {
                id: id.clone(),
                valid: all.iter().map(|i| i.id.to_string()).collect(),
            });
        }
    }
    let started = Instant::now();
    let selected: Vec<&Identity> = all
        .iter()
        .filter(|i| ids.is_empty() || ids.iter().any(|s| s == i.id))
        .collect();
    let records = selected.par_iter().map(|i| check(i, cfg)).collect();
    Ok(VerificationReport {
        records,
        elapsed: started.elapsed(),
    })
}

pub fn verify_all(cfg: &QuadConfig) -> Result<VerificationReport> {
    verify_selected(&[], cfg)
}
