//! Exact operator-identity checks on monomials, and the relation suites.

use rayon::prelude::*;
use serde::Serialize;

use super::coeffs::{a_i_poly, q_i_poly};
use super::params::Params;
use super::rep::{Op, Representation};
use crate::exactpoly::{half, int, Exponent, Rational, SparsePoly};
use crate::weyl::phi_inv;

/// A named operator identity `lhs = rhs`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub lhs: Op,
    pub rhs: Op,
}

impl Relation {
    pub fn new(name: impl Into<String>, lhs: Op, rhs: Op) -> Self {
        Relation {
            name: name.into(),
            lhs,
            rhs,
        }
    }
}

/// Outcome of checking one identity on all monomials up to a degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub holds: bool,
    /// Exponent of the first monomial (in exponent order) where the sides differ.
    pub counterexample: Option<Vec<u16>>,
    /// The weight λ labeling that monomial through φ.
    pub counterexample_weight: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub name: String,
    #[serde(flatten)]
    pub check: IdentityCheck,
}

/// All exponent vectors of total degree `≤ degree`, sorted.
pub fn monomials_up_to(n: usize, degree: usize) -> Vec<Exponent> {
    let mut out: Vec<Exponent> = vec![Exponent::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for e in &out {
            let used: usize = e.iter().map(|&k| k as usize).sum();
            for k in 0..=(degree - used) {
                let mut f = e.clone();
                f.push(k as u16);
                next.push(f);
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Applies both sides to every monomial of total degree `≤ degree` and
/// compares exactly. Monomials are processed in parallel; the reported
/// counterexample is the smallest failing exponent, independent of scheduling.
pub fn verify_operator_identity(rep: &Representation, lhs: &Op, rhs: &Op, degree: usize) -> IdentityCheck {
    let n = rep.n();
    let failing = monomials_up_to(n, degree)
        .into_par_iter()
        .filter(|e| {
            let m = SparsePoly::monomial(n, e.clone(), Rational::from_integer(1.into()));
            rep.apply(lhs, &m) != rep.apply(rhs, &m)
        })
        .min();
    IdentityCheck {
        holds: failing.is_none(),
        counterexample_weight: failing.as_ref().map(|e| phi_inv(e)),
        counterexample: failing.map(|e| e.to_vec()),
    }
}

pub fn run_relations(rep: &Representation, relations: &[Relation], degree: usize) -> Vec<RelationReport> {
    relations
        .iter()
        .map(|r| RelationReport {
            name: r.name.clone(),
            check: verify_operator_identity(rep, &r.lhs, &r.rhs, degree),
        })
        .collect()
}

fn sc(c: Rational) -> Op {
    Op::scalar(c)
}

fn mulp(p: SparsePoly) -> Op {
    Op::MulPoly(p)
}

fn word(letters: &[usize]) -> Op {
    Op::word_t(letters)
}

/// `Ξ_{1,n}` and `Ξ_{1,n}∨` as operators.
pub fn xi_1n(n: usize) -> Op {
    word(&Representation::xi_in_word(1, n))
}

pub fn xi_1n_vee(_n: usize) -> Op {
    Op::Un
}

/// `T_{i,j}` as an operator.
pub fn t_ij(i: usize, j: usize) -> Op {
    word(&Representation::t_ij_word(i, j))
}

/// The deformed braid relation `ABAB + tAB = BABA + tBA`.
fn deformed_braid(name: String, a: Op, b: Op, t: &Rational) -> Relation {
    let ab = a.clone() * b.clone();
    let ba = b.clone() * a.clone();
    Relation::new(
        name,
        ab.clone() * ab.clone() + ab.scale(t.clone()),
        ba.clone() * ba.clone() + ba.scale(t.clone()),
    )
}

fn commute(name: String, a: Op, b: Op) -> Relation {
    Relation::new(name, a.clone() * b.clone(), b * a)
}

/// Numerator of `d_i(x; 𝐭)`, i.e. `a_i(x) d_i(x)`, as a polynomial.
fn d_numer_poly(i: usize, n: usize, p: &Params) -> SparsePoly {
    let c = |v: Rational| SparsePoly::constant(n, v);
    match i {
        0 => {
            let av = &c(half()) - &SparsePoly::var(n, 0);
            &c(&p.t0 * &p.t0 - &p.u0 * &p.u0) + &(&av * &av)
        }
        i if i == n => &c(&p.tn * &p.tn - &p.un * &p.un) + &SparsePoly::var(n, n - 1).pow(2),
        _ => c(p.t.clone()),
    }
}

/// `s_i x_j` as a polynomial (linear action: `s₀ x₁ = 1 − x₁`).
fn reflected_var(i: usize, j: usize, n: usize) -> SparsePoly {
    let xj = SparsePoly::var(n, j - 1);
    match i {
        0 if j == 1 => &SparsePoly::one(n) - &xj,
        i if i == n && j == n => -xj,
        i if i > 0 && i < n && j == i => SparsePoly::var(n, i),
        i if i > 0 && i < n && j == i + 1 => SparsePoly::var(n, i - 1),
        _ => xj,
    }
}

/// Substitutes `x_k ↦ Y_k` in a polynomial of degree at most one.
fn linear_in_y(p: &SparsePoly) -> Op {
    Op::PolyInY(p.clone())
}

/// Every relation of the algebra checked as an operator identity.
pub fn relation_suite(n: usize, p: &Params) -> Vec<Relation> {
    let mut rels = Vec::new();
    let t = &p.t;
    let one = Rational::from_integer(1.into());
    let id = Op::Identity;

    // quadratic relations
    for i in 0..=n {
        let c = p.chi(i, n);
        rels.push(Relation::new(
            format!("T{i}^2 = chi{i}^2"),
            Op::T(i) * Op::T(i),
            sc(&c * &c),
        ));
    }
    rels.push(Relation::new(
        "T0v^2 = u0^2",
        Op::TVee(0) * Op::TVee(0),
        sc(&p.u0 * &p.u0),
    ));
    rels.push(Relation::new(
        format!("T{n}v^2 = un^2"),
        Op::TVee(n) * Op::TVee(n),
        sc(&p.un * &p.un),
    ));

    // braid-type relations for T and for T∨
    for (tag, g) in [("T", Op::T as fn(usize) -> Op), ("Tv", Op::TVee as fn(usize) -> Op)] {
        for i in [0, n - 1] {
            rels.push(deformed_braid(
                format!("deformed braid {tag}{i} {tag}{}", i + 1),
                g(i),
                g(i + 1),
                t,
            ));
        }
        for i in 1..n.saturating_sub(1) {
            if i + 1 < n {
                rels.push(Relation::new(
                    format!("braid {tag}{i} {tag}{}", i + 1),
                    g(i) * g(i + 1) * g(i),
                    g(i + 1) * g(i) * g(i + 1),
                ));
            }
        }
        for i in 0..=n {
            for j in i + 2..=n {
                rels.push(commute(format!("commute {tag}{i} {tag}{j}"), g(i), g(j)));
            }
        }
    }

    // cross relations with p = x_j, denominators cleared by a_i(X)
    for i in 0..=n {
        let ai = a_i_poly(i, n);
        let num = d_numer_poly(i, n, p);
        for j in 1..=n {
            let sxj = reflected_var(i, j, n);
            let xj = SparsePoly::var(n, j - 1);
            let lhs = mulp(ai.clone()) * (Op::T(i) * Op::X(j) - mulp(sxj.clone()) * Op::T(i));
            let rhs = mulp(&num * &(&sxj - &xj));
            rels.push(Relation::new(format!("cross T{i} X{j}"), lhs, rhs));
        }
    }

    // relations of the X/T lemma
    let x1_half = Op::X(1) - sc(half());
    rels.push(Relation::new(
        "(X1 - 1/2 - T0)^2 = u0^2",
        (x1_half.clone() - Op::T(0)) * (x1_half - Op::T(0)),
        sc(&p.u0 * &p.u0),
    ));
    rels.push(Relation::new(
        "(Xn + Tn)^2 = un^2",
        (Op::X(n) + Op::T(n)) * (Op::X(n) + Op::T(n)),
        sc(&p.un * &p.un),
    ));
    for i in 1..n {
        rels.push(Relation::new(
            format!("T{i} X{i} T{i} = X{} - t T{i}", i + 1),
            Op::T(i) * Op::X(i) * Op::T(i),
            Op::X(i + 1) - Op::T(i).scale(t.clone()),
        ));
        rels.push(commute(format!("commute X{i} T{}", i + 1), Op::X(i), Op::T(i + 1)));
    }
    for i in 1..=n {
        for j in 0..=n {
            if i.abs_diff(j) >= 2 {
                rels.push(commute(format!("commute X{i} T{j}"), Op::X(i), Op::T(j)));
            }
        }
    }

    // T∨ lemma
    rels.push(Relation::new(
        "T0 T1 T0v T1 = T1 T0v T1 T0",
        Op::T(0) * Op::T(1) * Op::TVee(0) * Op::T(1),
        Op::T(1) * Op::TVee(0) * Op::T(1) * Op::T(0),
    ));
    rels.push(Relation::new(
        "Tn Tn-1 Tnv Tn-1 = Tn-1 Tnv Tn-1 Tn",
        Op::T(n) * Op::T(n - 1) * Op::TVee(n) * Op::T(n - 1),
        Op::T(n - 1) * Op::TVee(n) * Op::T(n - 1) * Op::T(n),
    ));
    for i in 2..=n {
        rels.push(commute(format!("commute T0v X{i}"), Op::TVee(0), Op::X(i)));
    }
    for i in 1..n {
        rels.push(commute(format!("commute Tnv X{i}"), Op::TVee(n), Op::X(i)));
    }
    rels.push(commute("commute T0 Tnv".into(), Op::T(0), Op::TVee(n)));
    rels.push(commute("commute T0v Tn".into(), Op::TVee(0), Op::T(n)));
    rels.push(commute("commute T0v Tnv".into(), Op::TVee(0), Op::TVee(n)));
    let mut sum = sc(half()) + Op::T(0) + Op::TVee(0) + xi_1n(n) + xi_1n_vee(n);
    for j in 2..=n {
        sum = sum + t_ij(1, j).scale(t.clone());
    }
    rels.push(Relation::new("compatibility sum = 0", sum, sc(int(0))));

    // braid-type relations of T_{1,j} with the four generators
    for (tag, u) in [
        ("T0", Op::T(0)),
        ("T0v", Op::TVee(0)),
        ("Xi1n", xi_1n(n)),
        ("Xi1nv", xi_1n_vee(n)),
    ] {
        for j in 2..=n {
            rels.push(deformed_braid(
                format!("deformed braid {tag} T1{j}"),
                u.clone(),
                t_ij(1, j),
                t,
            ));
        }
    }

    // Y operators
    for i in 1..=n {
        for j in i + 1..=n {
            rels.push(commute(format!("commute Y{i} Y{j}"), Op::Y(i), Op::Y(j)));
        }
    }
    for i in 1..n {
        rels.push(Relation::new(
            format!("Y{} = T{i} Y{i} T{i} - t T{i}", i + 1),
            Op::Y(i + 1),
            Op::T(i) * Op::Y(i) * Op::T(i) - Op::T(i).scale(t.clone()),
        ));
    }
    rels.push(Relation::new("Un^2 = un^2", Op::Un * Op::Un, sc(&p.un * &p.un)));

    // Y-side cross relations, denominators cleared by a_i(Y)
    let ps = p.sigma();
    for i in 1..=n {
        let ai_y = linear_in_y(&a_i_poly(i, n));
        let num_y = Op::PolyInY(d_numer_poly(i, n, &ps));
        for j in 1..=n {
            let xj = SparsePoly::var(n, j - 1);
            let sxj = reflected_var(i, j, n);
            let lhs = ai_y.clone() * (Op::T(i) * Op::Y(j) - Op::PolyInY(sxj.clone()) * Op::T(i));
            let rhs = num_y.clone() * Op::PolyInY(&xj - &sxj);
            rels.push(Relation::new(format!("Y-cross T{i} Y{j}"), lhs, rhs));
        }
    }

    // center: elementary symmetric functions of Y_i² commute with T_i
    let squares: Vec<SparsePoly> = (0..n).map(|k| SparsePoly::var(n, k).pow(2)).collect();
    for k in 1..=n {
        let ek = elementary_symmetric(&squares, k, n);
        for i in 1..=n {
            rels.push(commute(
                format!("center e{k}(Y^2) T{i}"),
                Op::PolyInY(ek.clone()),
                Op::T(i),
            ));
        }
    }

    // intertwiners
    for i in [0, n - 1] {
        rels.push(Relation::new(
            format!("intertwiner braid S{i} S{}", i + 1),
            Op::S(i) * Op::S(i + 1) * Op::S(i) * Op::S(i + 1),
            Op::S(i + 1) * Op::S(i) * Op::S(i + 1) * Op::S(i),
        ));
    }
    for i in 1..n.saturating_sub(1) {
        if i + 1 < n {
            rels.push(Relation::new(
                format!("intertwiner braid S{i} S{}", i + 1),
                Op::S(i) * Op::S(i + 1) * Op::S(i),
                Op::S(i + 1) * Op::S(i) * Op::S(i + 1),
            ));
        }
    }
    for i in 0..=n {
        for j in i + 2..=n {
            rels.push(commute(format!("commute S{i} S{j}"), Op::S(i), Op::S(j)));
        }
    }
    for i in 0..=n {
        rels.push(Relation::new(
            format!("S{i}^2 = q{i}(Y)"),
            Op::S(i) * Op::S(i),
            Op::PolyInY(q_i_poly(i, n, p)),
        ));
    }
    let _ = (one, id);
    rels
}

/// `e_k` of the given polynomials.
pub fn elementary_symmetric(vals: &[SparsePoly], k: usize, n: usize) -> SparsePoly {
    // e_k via the generating polynomial ∏(1 + z v_j), tracked coefficientwise
    let mut e: Vec<SparsePoly> = vec![SparsePoly::one(n)];
    for v in vals {
        let mut next = e.clone();
        next.push(SparsePoly::zero(n));
        for d in 1..next.len() {
            next[d] = &next[d] + &(&e[d - 1] * v);
        }
        e = next;
    }
    e.get(k).cloned().unwrap_or_else(|| SparsePoly::zero(n))
}

/// GDAHA gauge constants `γ_k = μ_{i₀}/4` and `μ(𝐭) = (½−t₀−u₀−tₙ−uₙ, 2t₀, 2u₀, 2tₙ, 2uₙ)`.
pub fn gdaha_mu(p: &Params) -> [Rational; 5] {
    let two = int(2);
    [
        half() - &p.t0 - &p.u0 - &p.tn - &p.un,
        &two * &p.t0,
        &two * &p.u0,
        &two * &p.tn,
        &two * &p.un,
    ]
}

/// The reduced presentation of the rational GDAHA of type D̃₄, with
/// `V₁..V₄ = T₀+γ₁+t₀, T₀∨+γ₂+u₀, Ξ_{1,n}+γ₃+tₙ, Ξ_{1,n}∨+γ₄+uₙ`, `s_i = T_i`
/// and `ν = −t`. The sum relation runs over `k = 2..n`.
pub fn gdaha_relations(n: usize, p: &Params) -> Vec<Relation> {
    let mu = gdaha_mu(p);
    let gamma = &mu[0] / int(4);
    let nu = -p.t.clone();
    let v = [
        Op::T(0) + sc(&gamma + &p.t0),
        Op::TVee(0) + sc(&gamma + &p.u0),
        xi_1n(n) + sc(&gamma + &p.tn),
        xi_1n_vee(n) + sc(&gamma + &p.un),
    ];
    let s1 = |j: usize| t_ij(1, j);
    let mut rels = Vec::new();
    for i in 1..n {
        rels.push(Relation::new(format!("s{i}^2 = 1"), Op::T(i) * Op::T(i), Op::Identity));
    }
    for i in 1..n.saturating_sub(1) {
        rels.push(Relation::new(
            format!("braid s{i} s{}", i + 1),
            Op::T(i) * Op::T(i + 1) * Op::T(i),
            Op::T(i + 1) * Op::T(i) * Op::T(i + 1),
        ));
    }
    for l in 0..4 {
        for i in 2..n {
            rels.push(commute(format!("commute s{i} V{}", l + 1), Op::T(i), v[l].clone()));
        }
        // (V_l − γ_l)(V_l − γ_l − μ_{i_l}) = 0
        let a = v[l].clone() - sc(gamma.clone());
        let b = a.clone() - sc(mu[l + 1].clone());
        rels.push(Relation::new(format!("quadratic V{}", l + 1), a * b, sc(int(0))));
    }
    let mut rhs = sc(int(0));
    for k in 2..=n {
        rhs = rhs + s1(k).scale(nu.clone());
    }
    rels.push(Relation::new(
        "sum V1+V2+V3+V4 = nu sum s1k",
        v[0].clone() + v[1].clone() + v[2].clone() + v[3].clone(),
        rhs,
    ));
    for j in 2..=n {
        for l in 0..4 {
            let conj = s1(j) * v[l].clone() * s1(j);
            rels.push(Relation::new(
                format!("[V{}, s1{j} V{} s1{j}] = nu [V{}, s1{j}]", l + 1, l + 1, l + 1),
                Op::commutator(&v[l], &conj),
                Op::commutator(&v[l], &s1(j)).scale(nu.clone()),
            ));
            for m in 0..4 {
                if m != l {
                    let conj = s1(j) * v[m].clone() * s1(j);
                    rels.push(Relation::new(
                        format!("[V{}, s1{j} V{} s1{j}] = 0", l + 1, m + 1),
                        Op::commutator(&v[l], &conj),
                        sc(int(0)),
                    ));
                }
            }
        }
    }
    rels
}
