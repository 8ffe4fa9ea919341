use std::f64::consts::{PI, SQRT_2};

use hyperlab::change_of_variables::{f_minus_u, ln_tanh, u_minus_g};
use hyperlab::quadrature::{
    default_tail_span, integrate_finite, integrate_semi_infinite,
    integrate_semi_infinite_with_span, integrate_unit_square,
};
use hyperlab::special_functions::{const_alpha, li2};
use hyperlab::QuadConfig;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// alpha^2/4 - pi^2/16, evaluated to 40 digits.
const LOG_TANH_INTEGRAL: f64 = -0.422_645_425_094_160_9;

fn cfg() -> QuadConfig {
    QuadConfig::default()
}

#[test]
fn log_over_one_minus_square_with_endpoint_singularity() {
    let r = integrate_finite(
        |t: f64| t.ln() / ((1.0 - t) * (1.0 + t)),
        SQRT_2 - 1.0,
        1.0,
        &cfg(),
    )
    .unwrap();
    assert!(r.converged);
    assert!((r.value - LOG_TANH_INTEGRAL).abs() <= 1e-12, "{r:?}");
}

#[test]
fn helper_integral_matches_dilogarithm() {
    // signed integral from 1 down to z = 2 - sqrt2 equals Li2(1 - z)
    let z = 2.0 - SQRT_2;
    let r = integrate_finite(|t: f64| t.ln() / (1.0 - t), z, 1.0, &cfg()).unwrap();
    assert!((-r.value - li2(1.0 - z).unwrap().value).abs() <= 1e-12);
}

#[test]
fn semi_infinite_examples() {
    let r = integrate_semi_infinite(|u: f64| (-2.0 * u).exp(), 0.0, &cfg()).unwrap();
    assert!((r.value - 0.5).abs() <= 1e-14);

    let r = integrate_semi_infinite(f_minus_u, 0.0, &cfg()).unwrap();
    assert!(r.converged);
    assert!((r.value - PI * PI / 16.0).abs() <= 1e-12);

    let r = integrate_semi_infinite(ln_tanh, 0.5 * const_alpha::<f64>(), &cfg()).unwrap();
    assert!((r.value - LOG_TANH_INTEGRAL).abs() <= 1e-12);
}

#[test]
fn unit_square_examples() {
    let one = integrate_unit_square(|_: f64, _| 1.0, &cfg()).unwrap();
    assert!((one.value - 1.0).abs() <= 1e-14);
    let k = integrate_unit_square(|x: f64, y| 1.0 / (1.0 - x * x * y * y), &cfg()).unwrap();
    assert!(k.converged && k.error_bound <= cfg().abs_tol);
    assert!((k.value - 1.233_700_550_136_17).abs() <= 1e-10);
    let i = integrate_unit_square(|x: f64, y| 1.0 / (1.0 - x * y), &cfg()).unwrap();
    assert!((i.value - 1.644_934_066_848_226_4).abs() <= 1e-10);
}

#[test]
fn unit_square_agrees_with_reduced_one_dimensional_form() {
    // inner x-integral of 1/(1 - x^2 y^2) over (0,1) is atanh(y)/y
    let two_d = integrate_unit_square(|x: f64, y| 1.0 / (1.0 - x * x * y * y), &cfg()).unwrap();
    let one_d = integrate_finite(|y: f64| y.atanh() / y, 0.0, 1.0, &cfg()).unwrap();
    assert!((two_d.value - one_d.value).abs() <= 10.0 * cfg().abs_tol);
}

#[test]
fn linearity_on_sampled_smooth_integrands() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let tol = cfg().abs_tol;
    for _ in 0..25 {
        let (p, q, r, c): (f64, f64, f64, f64) = (
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(0.1..3.0),
            rng.gen_range(-5.0..5.0),
        );
        let (a, b) = (rng.gen_range(-1.0..0.5), rng.gen_range(0.6..2.0));
        let f = |x: f64| p * x * x + q * x.sin();
        let g = |x: f64| (-r * x).exp() * x.cos();
        let lhs = integrate_finite(|x| c * f(x) + g(x), a, b, &cfg())
            .unwrap()
            .value;
        let rf = integrate_finite(f, a, b, &cfg()).unwrap().value;
        let rg = integrate_finite(g, a, b, &cfg()).unwrap().value;
        assert!((lhs - (c * rf + rg)).abs() <= 10.0 * tol);
    }
}

#[test]
fn doubling_tail_span_changes_nothing() {
    let span = default_tail_span::<f64>();
    let alpha: f64 = const_alpha();
    let tol = cfg().abs_tol;

    let t1 = integrate_semi_infinite_with_span(f_minus_u, 0.0, span, &cfg()).unwrap();
    let t1x2 = integrate_semi_infinite_with_span(f_minus_u, 0.0, 2.0 * span, &cfg()).unwrap();
    assert!((t1.value - t1x2.value).abs() <= tol);

    let g = |u: f64| u_minus_g(u).unwrap();
    let t2 = integrate_semi_infinite_with_span(g, alpha, span, &cfg()).unwrap();
    let t2x2 = integrate_semi_infinite_with_span(g, alpha, 2.0 * span, &cfg()).unwrap();
    assert!((t2.value - t2x2.value).abs() <= tol);
}

#[test]
fn short_span_is_caught() {
    // a span of 2 drops e^{-4}/2 of the e^{-2u} mass
    let short = integrate_semi_infinite_with_span(|u: f64| (-2.0 * u).exp(), 0.0, 2.0, &cfg())
        .unwrap()
        .value;
    assert!((short - 0.5 * (1.0 - (-4.0_f64).exp())).abs() < 1e-6);
}

#[test]
fn results_are_bit_identical_across_runs() {
    let f = |x: f64, y: f64| (x.ln() + y.ln()) / (1.0 - x * y);
    let a = integrate_unit_square(f, &cfg()).unwrap();
    let b = integrate_unit_square(f, &cfg()).unwrap();
    assert_eq!(a.value.to_bits(), b.value.to_bits());
    assert_eq!(a.evaluations, b.evaluations);

    let c = integrate_semi_infinite(f_minus_u, 0.0, &cfg()).unwrap();
    let d = integrate_semi_infinite(f_minus_u, 0.0, &cfg()).unwrap();
    assert_eq!(c.value.to_bits(), d.value.to_bits());
}

#[test]
fn converged_results_respect_requested_tolerance() {
    for tol in [1e-4, 1e-8, 1e-12] {
        let c = cfg().with_tol(tol);
        let r = integrate_unit_square(|x: f64, y| 1.0 / (1.0 - x * y), &c).unwrap();
        assert!(r.converged);
        assert!(r.error_bound <= tol);
        assert!((r.value - PI * PI / 6.0).abs() <= tol);
    }
}

#[test]
fn single_precision_square() {
    let c = hyperlab::QuadConfig32::default();
    let r = integrate_unit_square(|x: f32, y| 1.0 / (1.0 - x * y), &c).unwrap();
    assert!((r.value as f64 - PI * PI / 6.0).abs() < 1e-4, "{r:?}");
}
