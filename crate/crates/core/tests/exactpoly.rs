//! Ring laws, exact division and grid certification of `SparsePoly`.

use proptest::prelude::*;
use wilson_core::exactpoly::{
    divide_linear, format_rational, grid_verify_zero, interpolate_tensor, parse_rational, q, LinearForm, Rational,
    SparsePoly,
};

fn poly(n: usize) -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec((prop::collection::vec(0u16..4, n), -6i64..6, 1i64..5), 0..6).prop_map(move |terms| {
        SparsePoly::from_terms(n, terms.into_iter().map(|(e, a, b)| (e.into_iter().collect(), q(a, b))))
    })
}

fn point(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-9i64..9, 1i64..6), n).prop_map(|v| v.into_iter().map(|(a, b)| q(a, b)).collect())
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(2), b in poly(2), c in poly(2)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &SparsePoly::one(2), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(3), b in poly(3), x in point(3)) {
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn divide_round_trip(p in poly(2), a in -3i64..4, b in -3i64..4, c in -4i64..4) {
        prop_assume!(a != 0 || b != 0);
        let l = LinearForm::new(vec![Rational::from_integer(a.into()), Rational::from_integer(b.into())], Rational::from_integer(c.into()));
        let product = &p * &l.to_poly();
        prop_assert_eq!(divide_linear(&product, &l).unwrap(), p);
    }

    #[test]
    fn rational_format_round_trip(a in -1000i64..1000, b in 1i64..1000) {
        let r = q(a, b);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }
}

#[test]
fn division_by_non_factor_is_rejected() {
    let x = SparsePoly::var(2, 0);
    let l = LinearForm::var(2, 1);
    assert!(divide_linear(&(&x + &SparsePoly::one(2)), &l).is_err());
}

#[test]
fn grid_certificate_detects_nonzero() {
    let p = &SparsePoly::var(2, 0) * &SparsePoly::var(2, 1);
    let zero = grid_verify_zero(2, 3, None, |x| Ok(p.eval(x) - &x[0] * &x[1])).unwrap();
    let nonzero = grid_verify_zero(2, 3, None, |x| Ok(p.eval(x))).unwrap();
    assert!(zero);
    assert!(!nonzero);
}

#[test]
fn interpolation_recovers_polynomial() {
    let x = SparsePoly::var(2, 0);
    let y = SparsePoly::var(2, 1);
    let p = &(&x.pow(2) * &y) - &y.scale(&q(3, 7));
    let got = interpolate_tensor(2, 4, None, |pt| Ok(p.eval(pt))).unwrap();
    assert_eq!(got, p);
}

#[test]
fn decimals_parse_exactly() {
    assert_eq!(parse_rational("0.25").unwrap(), q(1, 4));
    assert_eq!(parse_rational("-1.5").unwrap(), q(-3, 2));
    assert_eq!(parse_rational(" 7/10 ").unwrap(), q(7, 10));
    assert!(parse_rational("1/0").is_err());
    assert!(parse_rational("abc").is_err());
}

#[test]
fn json_terms_round_trip() {
    let p = &SparsePoly::var(3, 2).pow(2).scale(&q(-5, 3)) + &SparsePoly::constant(3, q(1, 2));
    assert_eq!(SparsePoly::from_json_terms(3, &p.to_json_terms()).unwrap(), p);
}
