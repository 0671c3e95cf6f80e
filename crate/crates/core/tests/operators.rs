//! Operator identities of the polynomial representation.

use wilson_core::exactpoly::{int, SparsePoly};
use wilson_core::operators::coeffs::q_i_poly;
use wilson_core::operators::relations::t_ij;
use wilson_core::operators::{
    apply_l_shift, apply_l_sym, check_t_triangularity, gdaha_relations, l_eigenvalue, relation_suite, run_relations,
    verify_operator_identity, Op, Params, Relation, Representation,
};
use wilson_core::wilson::WilsonEngine;

fn assert_all_hold(rep: &Representation, rels: &[Relation], degree: usize) {
    for r in run_relations(rep, rels, degree) {
        assert!(r.check.holds, "{} fails at {:?}", r.name, r.check.counterexample_weight);
    }
}

#[test]
fn defining_relations_hold_in_low_degree() {
    for p in [Params::p_star(), Params::p_alt()] {
        let rep = Representation::new(2, p.clone());
        assert_all_hold(&rep, &relation_suite(2, &p), 3);
    }
    let p = Params::p_alt();
    assert_all_hold(&Representation::new(3, p.clone()), &relation_suite(3, &p), 2);
}

#[test]
fn perturbed_relation_is_caught_at_the_constant() {
    let p = Params::p_star();
    let rep = Representation::new(2, p.clone());
    let wrong = Op::scalar(&p.t0 * &p.t0 + int(1));
    let check = verify_operator_identity(&rep, &(Op::T(0) * Op::T(0)), &wrong, 3);
    assert!(!check.holds);
    assert_eq!(check.counterexample, Some(vec![0, 0]));
    assert_eq!(check.counterexample_weight, Some(vec![0, 0]));
}

#[test]
fn intertwiners_square_to_q_of_y() {
    for n in [2, 3] {
        let p = Params::p_alt();
        let rep = Representation::new(n, p.clone());
        let degree = if n == 2 { 3 } else { 2 };
        for i in 0..=n {
            let check =
                verify_operator_identity(&rep, &(Op::S(i) * Op::S(i)), &Op::PolyInY(q_i_poly(i, n, &p)), degree);
            assert!(check.holds, "n={n} S{i}");
        }
    }
}

#[test]
fn t_operators_are_triangular() {
    for p in [Params::p_star(), Params::p_alt()] {
        assert!(check_t_triangularity(&Representation::new(2, p), 3).is_empty());
    }
}

#[test]
fn gdaha_presentation_holds() {
    let p = Params::p_star();
    assert_all_hold(&Representation::new(2, p.clone()), &gdaha_relations(2, &p), 4);
    assert_all_hold(&Representation::new(3, p.clone()), &gdaha_relations(3, &p), 2);
}

/// The sum relation needs every `s_{1k}` with `k` up to `n`; stopping at
/// `n − 1` breaks it once there is more than one term.
#[test]
fn gdaha_sum_needs_the_full_range() {
    let n = 3;
    let p = Params::p_star();
    let rep = Representation::new(n, p.clone());
    let sum = gdaha_relations(n, &p)
        .into_iter()
        .find(|r| r.name.starts_with("sum V1+V2+V3+V4"))
        .expect("sum relation present");
    assert!(verify_operator_identity(&rep, &sum.lhs, &sum.rhs, 2).holds);
    let mut short = Op::scalar(int(0));
    for k in 2..n {
        short = short + t_ij(1, k).scale(-p.t.clone());
    }
    assert!(!verify_operator_identity(&rep, &sum.lhs, &short, 2).holds);
}

#[test]
fn wilson_operator_shift_direction_matters() {
    let p = Params::p_star();
    let eng = WilsonEngine::new(2, p.clone());
    for l in [[1, 0], [1, 1]] {
        let e = eng.symmetric_e_plus(&l).unwrap();
        let le = apply_l_sym(&e, &p).unwrap();
        assert_eq!(le, e.scale(&l_eigenvalue(&l, &p)));
        // Swapping x+ε_i for x−ε_i does not give the same operator.
        match apply_l_shift(&e, &p, -1) {
            Ok(other) => assert_ne!(other, le, "{l:?}"),
            Err(err) => assert!(err.to_string().contains("shift -1"), "{err}"),
        }
    }
    let one = SparsePoly::one(2);
    assert!(apply_l_sym(&one, &p).unwrap().is_zero());
    assert!(
        apply_l_sym(&SparsePoly::var(2, 0), &p).is_err(),
        "x1 is not W0-invariant"
    );
}
