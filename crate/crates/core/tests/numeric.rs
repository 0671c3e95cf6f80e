//! Floating-point layer: Gamma identities, the constant term and the
//! quadrature suites.

use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use wilson_core::exactpoly::{int, to_f64, SparsePoly};
use wilson_core::numeric::{
    complex_gamma, gustafson_constant, quad_inner, run_numeric_suite, QuadratureSpec, WeightKind, NUMERIC_SUITES,
};
use wilson_core::operators::Params;

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(f64::MIN_POSITIVE)
}

proptest! {
    #[test]
    fn gamma_recurrence(re in 0.05f64..12.0, im in -15.0f64..15.0) {
        let z = Complex64::new(re, im);
        let lhs = complex_gamma(z + 1.0).unwrap();
        let rhs = z * complex_gamma(z).unwrap();
        prop_assert!(rel(lhs, rhs) < 1e-10, "z = {z}: {lhs} vs {rhs}");
    }

    #[test]
    fn gamma_reflection(re in 0.05f64..0.95, im in -3.0f64..3.0) {
        let z = Complex64::new(re, im);
        let lhs = complex_gamma(z).unwrap() * complex_gamma(1.0 - z).unwrap();
        let rhs = PI / (z * PI).sin();
        prop_assert!(rel(lhs, rhs) < 1e-10, "z = {z}");
    }
}

/// The rank-one constant term against a direct trapezoid integral of
/// `|Γ(a+iy)Γ(b+iy)Γ(c+iy)Γ(d+iy)/Γ(2iy)|²` over the line, with measure `dy/2π`.
#[test]
fn rank_one_constant_term_matches_direct_integral() {
    for p in [Params::p_star(), Params::p_alt()] {
        let v = p.wilson_abcd().map(|x| to_f64(&x));
        let h = 1e-3;
        let steps = 25_000;
        let mut sum = 0.0;
        for k in -steps..=steps {
            let y = k as f64 * h;
            let num: f64 = v
                .iter()
                .map(|&a| complex_gamma(Complex64::new(a, y)).unwrap().norm_sqr())
                .product();
            // 1/|Γ(2iy)|² = 2y sinh(2πy)/π
            let recip = if y == 0.0 {
                0.0
            } else {
                2.0 * y * (2.0 * PI * y).sinh() / PI
            };
            sum += num * recip;
        }
        let direct = sum * h / (2.0 * PI);
        let closed = gustafson_constant(&p, 1).unwrap();
        assert!((direct - closed).abs() < 1e-9 * closed, "{direct} vs {closed}");
    }
}

#[test]
fn constant_term_at_rank_two_matches_quadrature() {
    let p = Params::p_star();
    let one = SparsePoly::one(2);
    let r = quad_inner(&one, &one, WeightKind::Plus, &QuadratureSpec::default(), &p).unwrap();
    let exact = gustafson_constant(&p, 2).unwrap();
    assert!((r.re - exact).abs() < 1e-9 * exact, "{} vs {exact}", r.re);
    assert!(r.im.abs() < 1e-12 * exact);
}

#[test]
fn every_suite_passes_at_default_parameters() {
    let p = Params::p_star();
    let spec = QuadratureSpec::default();
    for name in NUMERIC_SUITES {
        let r = run_numeric_suite(name, &p, &spec, None).unwrap();
        for c in &r.checks {
            assert!(c.passed, "{name}/{}: {c:?}", c.name);
        }
        assert!(r.passed);
    }
}

#[test]
fn configuration_errors() {
    let p = Params::p_star();
    let coarse = QuadratureSpec {
        panels: 2,
        nodes_per_panel: 8,
        ..QuadratureSpec::default()
    };
    assert!(run_numeric_suite("constant", &p, &coarse, None).is_err());
    assert!(run_numeric_suite("bogus", &p, &QuadratureSpec::default(), None).is_err());
    let mut zero_t = p.clone();
    zero_t.t = int(0);
    assert!(gustafson_constant(&zero_t, 2).is_err());
}
