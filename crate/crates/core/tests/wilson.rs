//! Nonsymmetric and symmetric Wilson polynomials against independent oracles.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::Zero;
use wilson_core::exactpoly::{int, linalg, q, Rational, SparsePoly};
use wilson_core::operators::coeffs::{c_alpha, k_alpha};
use wilson_core::operators::{is_w0_invariant, monomials_up_to, Params};
use wilson_core::weyl::{phi, simple_root, weights_up_to};
use wilson_core::wilson::{gamma_point, FiniteSpectralFunction, Mass, WilsonEngine};

fn pstar() -> WilsonEngine {
    WilsonEngine::new(2, Params::p_star())
}

fn neg(x: &[Rational]) -> Vec<Rational> {
    x.iter().map(|v| -v.clone()).collect()
}

#[test]
fn spectral_points_at_default_parameters() {
    let p = Params::p_star();
    assert_eq!(gamma_point(&[0, 0], &p), vec![int(2), q(3, 2)]);
    assert_eq!(gamma_point(&[-1, 0], &p), vec![int(-3), q(3, 2)]);
    assert_eq!(pstar().x_point(&[0, 0]), vec![q(17, 10), q(6, 5)]);
    assert_eq!(pstar().x0(), &[q(17, 10), q(6, 5)]);
}

#[test]
fn trivial_weight_gives_one() {
    let r = pstar().record(&[0, 0]).unwrap();
    assert_eq!(r.p, SparsePoly::one(2));
    assert_eq!(r.eval_at_minus_x0, int(1));
    assert_eq!(r.rel_norm, int(1));
}

/// The polynomial for −ε₁ spans the joint eigenspace of `Y₁, Y₂` on
/// `span{1, x₁, x₂}` for the eigenvalue `γ_{−ε₁}`.
#[test]
fn minus_eps1_is_the_joint_eigenvector_on_degree_one() {
    let eng = pstar();
    let gamma = eng.gamma_point(&[-1, 0]);
    let basis = monomials_up_to(2, 1);
    let mut rows = Vec::new();
    for i in 1..=2 {
        let images: Vec<SparsePoly> = basis
            .iter()
            .map(|e| eng.rep().apply_y(i, &SparsePoly::monomial(2, e.clone(), int(1))))
            .collect();
        for (r, m) in basis.iter().enumerate() {
            let row = (0..basis.len())
                .map(|c| images[c].coeff(m) - if r == c { gamma[i - 1].clone() } else { Rational::zero() })
                .collect();
            rows.push(row);
        }
    }
    assert_eq!(linalg::rank(&rows), basis.len() - 1, "eigenspace is one-dimensional");
    let p = eng.record(&[-1, 0]).unwrap().p.clone();
    let v: Vec<Rational> = basis.iter().map(|m| p.coeff(m)).collect();
    for row in &rows {
        let dot: Rational = row.iter().zip(&v).map(|(a, b)| a * b).sum();
        assert!(dot.is_zero());
    }
    assert!(!p.coeff(&[1, 0]).is_zero());
    assert_eq!(p.total_degree(), Some(1));
}

#[test]
fn eigenvalue_equations_and_leading_terms() {
    for (n, r) in [(2, 3), (3, 2)] {
        let eng = WilsonEngine::new(n, Params::p_alt());
        for l in weights_up_to(n, r) {
            let rec = eng.record(&l).unwrap();
            for i in 1..=n {
                assert_eq!(
                    eng.rep().apply_y(i, &rec.p),
                    rec.p.scale(&rec.gamma[i - 1]),
                    "{l:?} Y{i}"
                );
            }
            assert!(!rec.p.coeff(&phi(&l)).is_zero());
        }
    }
}

#[test]
fn x1_expands_on_degree_one_weights() {
    let eng = pstar();
    let x1 = SparsePoly::var(2, 0);
    let coeffs = eng.expand_in_e(&x1).unwrap();
    // Triangularity bounds the support by the weights of degree ≤ 1.
    let support: BTreeSet<Vec<i64>> = coeffs.keys().cloned().collect();
    let allowed: BTreeSet<Vec<i64>> = [vec![0, 0], vec![-1, 0], vec![0, -1]].into_iter().collect();
    assert!(support.is_subset(&allowed), "{support:?}");
    assert!(support.contains(&vec![-1, 0]));
    let mut sum = SparsePoly::zero(2);
    for (l, c) in &coeffs {
        sum = sum + eng.e(l).unwrap().scale(c);
    }
    assert_eq!(sum, x1);
}

#[test]
fn evaluation_at_minus_eps1_is_one_factor() {
    let eng = pstar();
    let p = Params::p_star();
    let direct = eng.record(&[-1, 0]).unwrap().eval_at_minus_x0.clone();
    let single = k_alpha(&simple_root(0, 2), &neg(&p.gamma0(2)), &p).unwrap();
    assert_eq!(eng.evaluation_value(&[-1, 0]).unwrap(), single);
    assert_eq!(direct, single);
    assert_eq!(direct, q(-416, 25));
}

#[test]
fn evaluation_formula_matches_direct_evaluation() {
    for params in [Params::p_star(), Params::p_alt()] {
        let eng = WilsonEngine::new(2, params);
        for l in weights_up_to(2, 3) {
            let direct = eng.record(&l).unwrap().eval_at_minus_x0.clone();
            assert_eq!(eng.evaluation_value(&l).unwrap(), direct, "{l:?}");
        }
    }
}

#[test]
fn relative_norm_of_minus_eps1_is_one_ratio() {
    let eng = pstar();
    let s = Params::p_star().sigma();
    let mg = neg(&eng.gamma_point(&[-1, 0]));
    let a0 = simple_root(0, 2);
    let expected = c_alpha(&a0.neg(), &mg, &s).unwrap() / c_alpha(&a0, &mg, &s).unwrap();
    assert_eq!(eng.relative_norm(&[-1, 0]).unwrap(), expected);
    assert_eq!(eng.relative_norm(&[0, 0]).unwrap(), int(1));
}

#[test]
fn norm_ratios_telescope() {
    for params in [Params::p_star(), Params::p_alt()] {
        let rep = WilsonEngine::new(2, params).norm_consistency(4).unwrap();
        assert!(rep.path_independent);
        assert!(rep.holds, "{:?}", rep.steps.iter().find(|s| !s.holds));
    }
}

#[test]
fn algebraic_form_is_orthogonal() {
    let eng = pstar();
    let c = Mass::Absolute(q(3, 7));
    let ws = weights_up_to(2, 2);
    for l in &ws {
        for m in &ws {
            let ip = eng.alg_inner(&eng.e(l).unwrap(), &eng.e(m).unwrap(), &c).unwrap();
            if l == m {
                assert_eq!(ip, q(3, 7) / &eng.record(l).unwrap().rel_norm);
            } else {
                assert!(ip.is_zero());
            }
        }
    }
    assert_eq!(
        eng.alg_inner(&SparsePoly::one(2), &SparsePoly::one(2), &c).unwrap(),
        q(3, 7)
    );
}

#[test]
fn fourier_pair_on_basis_elements() {
    let eng = pstar();
    let c = Mass::Absolute(q(5, 2));
    for l in weights_up_to(2, 2) {
        let nu = eng.record(&l).unwrap().rel_norm.clone();
        let f = eng.fourier_f(&eng.e(&l).unwrap(), &c).unwrap();
        let mut expected = FiniteSpectralFunction::delta(&l);
        expected.values.insert(l.clone(), q(5, 2) / &nu);
        assert_eq!(f, expected);
        let g = eng.fourier_g(&FiniteSpectralFunction::delta(&l), &c).unwrap();
        assert_eq!(g, eng.e(&l).unwrap().scale(&(nu / q(5, 2))));
    }
}

#[test]
fn fourier_inverse_and_plancherel() {
    let eng = pstar();
    let x = |i| SparsePoly::var(2, i);
    let f = &(&x(0) * &x(1)) + &SparsePoly::constant(2, int(3));
    let g = &x(0).pow(2).scale(&q(-2, 5)) + &x(1);
    for mass in [Mass::Unit, Mass::Absolute(q(7, 3))] {
        let ff = eng.fourier_f(&f, &mass).unwrap();
        assert_eq!(eng.fourier_g(&ff, &mass).unwrap(), f);
        let fg = eng.fourier_f(&g, &mass).unwrap();
        assert_eq!(
            eng.spectral_pairing(&ff, &fg, &mass).unwrap(),
            eng.alg_inner(&f, &g, &mass).unwrap()
        );
    }
}

#[test]
fn duality_at_origin_and_on_range() {
    let eng = pstar();
    let dual = eng.dual();
    assert!(eng.duality_check(&dual, &[0, 0], &[0, 0]).unwrap());
    for l in weights_up_to(2, 2) {
        for m in weights_up_to(2, 2) {
            assert!(eng.duality_check(&dual, &l, &m).unwrap(), "{l:?} {m:?}");
        }
    }
    assert!(eng.duality_check(&eng, &[0, 0], &[0, 0]).is_err());
}

#[test]
fn spectral_action_examples() {
    let eng = pstar();
    assert!(eng.verify_spectral_action(&[-1, 0], 1).unwrap());
    assert!(eng.verify_spectral_action(&[0, 0], 0).unwrap());
    assert!(eng.verify_intertwiner_on_e(&[0, 0], 0).unwrap());
    assert!(eng.verify_intertwiner_on_e(&[-1, 0], 1).unwrap());
}

#[test]
fn symmetric_polynomials() {
    let eng = pstar();
    assert_eq!(eng.symmetric_e_plus(&[0, 0]).unwrap(), SparsePoly::one(2));
    let e = eng.symmetric_e_plus(&[1, 0]).unwrap();
    assert!(is_w0_invariant(&e));
    assert_eq!(e.eval(eng.x0()), int(1));
    assert!(
        e.terms().all(|(exp, _)| exp.iter().all(|k| k % 2 == 0)),
        "even in each variable"
    );
    for l in [[1, 0], [1, 1], [2, 0]] {
        let (sum, c0) = eng.k_sum(&l).unwrap();
        assert_eq!(sum, c0);
        assert!(eng.verify_l_eigen(&l).unwrap());
        assert_eq!(
            eng.relative_norm_plus(&l).unwrap(),
            eng.symmetric_norm_from_expansion(&l).unwrap()
        );
    }
    assert!(eng.symmetric_e_plus(&[0, 1]).is_err());
}

#[test]
fn genericity_failure_names_the_collision() {
    // With t = 0 and t₀+tₙ = −1/2, γ₀ = (−1/2, −1/2) is fixed by s₀, so γ_{−ε₁} = γ₀.
    let p = Params::new(q(1, 2), q(1, 3), int(0), int(-1), q(1, 5));
    let err = WilsonEngine::new(2, p).check_genericity(2).unwrap_err();
    assert!(err.to_string().contains("γ_"), "{err}");
}

#[test]
fn records_are_deterministic_across_threads() {
    let json = |eng: &WilsonEngine| -> Vec<String> {
        weights_up_to(2, 3)
            .iter()
            .map(|l| serde_json::to_string(&eng.record(l).unwrap().to_json()).unwrap())
            .collect()
    };
    let first = json(&pstar());
    let shared = Arc::new(pstar());
    let handles: Vec<_> = (0..4)
        .map(|_| {
            let eng = shared.clone();
            std::thread::spawn(move || json(&eng))
        })
        .collect();
    for h in handles {
        assert_eq!(h.join().unwrap(), first);
    }
}
