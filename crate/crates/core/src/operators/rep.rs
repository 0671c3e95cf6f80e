//! The polynomial representation: generator actions and composite operators.

use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use super::params::Params;
use crate::error::Result;
use crate::exactpoly::{divide_linear, half, int, Exponent, LinearForm, Rational, SparsePoly};

/// A composable, linearly combinable endomorphism of the polynomial ring.
///
/// Indices follow the algebra: `T(i)` and `TVee(i)` take `i ∈ [0, n]`,
/// `X(i)` and `Y(i)` take `i ∈ [1, n]`. A `Compose` list is a product, so its
/// rightmost factor acts first.
#[derive(Clone, Debug)]
pub enum Op {
    Identity,
    T(usize),
    /// `T₀∨ = X₁ − ½ − T₀`, `Tₙ∨ = −Xₙ − Tₙ`, and `T_i∨ = T_i` in between.
    TVee(usize),
    X(usize),
    Y(usize),
    /// `Uₙ = T₁⋯Tₙ₋₁ Tₙ∨ Tₙ₋₁⋯T₁`.
    Un,
    /// Intertwiner `S_i`, as the full commutator.
    S(usize),
    /// Simple reflection `s_i` acting on polynomials.
    Reflect(usize),
    /// Multiplication by a fixed polynomial.
    MulPoly(SparsePoly),
    /// `f(Y)` for a polynomial `f`.
    PolyInY(SparsePoly),
    Compose(Vec<Op>),
    Sum(Vec<(Rational, Op)>),
}

impl Op {
    pub fn scalar(c: Rational) -> Op {
        Op::Sum(vec![(c, Op::Identity)])
    }

    pub fn word_t(letters: &[usize]) -> Op {
        Op::Compose(letters.iter().map(|&i| Op::T(i)).collect())
    }

    /// Commutator `[A, B] = AB − BA`.
    pub fn commutator(a: &Op, b: &Op) -> Op {
        a.clone() * b.clone() - b.clone() * a.clone()
    }

    pub fn scale(self, c: Rational) -> Op {
        Op::Sum(vec![(c, self)])
    }
}

impl Mul for Op {
    type Output = Op;
    fn mul(self, rhs: Op) -> Op {
        let mut v = match self {
            Op::Compose(v) => v,
            other => vec![other],
        };
        match rhs {
            Op::Compose(w) => v.extend(w),
            other => v.push(other),
        }
        Op::Compose(v)
    }
}

impl Add for Op {
    type Output = Op;
    fn add(self, rhs: Op) -> Op {
        let mut v = match self {
            Op::Sum(v) => v,
            other => vec![(Rational::one(), other)],
        };
        match rhs {
            Op::Sum(w) => v.extend(w),
            other => v.push((Rational::one(), other)),
        }
        Op::Sum(v)
    }
}

impl Neg for Op {
    type Output = Op;
    fn neg(self) -> Op {
        self.scale(-Rational::one())
    }
}

impl Sub for Op {
    type Output = Op;
    fn sub(self, rhs: Op) -> Op {
        self + (-rhs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Gen {
    T,
    TVee,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Composite {
    Y(usize),
    Un,
}

type LocalKey = (Gen, usize, u16, u16);

/// The polynomial representation at fixed rank and parameters.
///
/// Generator images are cached per local monomial: `T₀`, `T₀∨` only see `x₁`,
/// `Tₙ`, `Tₙ∨` only see `xₙ`, and `T_i` only sees `(x_i, x_{i+1})`, so
/// `T(x^e) = x^{rest} · T(x^{local})`. Images of `Y_i` and `Uₙ` on monomials
/// are cached as well. Caches are deterministic functions of their keys.
pub struct Representation {
    n: usize,
    params: Params,
    local: RwLock<HashMap<LocalKey, Arc<SparsePoly>>>,
    composite: RwLock<HashMap<(Composite, Exponent), Arc<SparsePoly>>>,
}

impl Representation {
    pub fn new(n: usize, params: Params) -> Self {
        assert!(n >= 2, "rank must be at least 2");
        Representation {
            n,
            params,
            local: RwLock::new(HashMap::new()),
            composite: RwLock::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// Affine map of the simple reflection `s_i` (`s₀: x₁ ↦ 1 − x₁`, `sₙ: xₙ ↦ −xₙ`).
    pub fn reflection_map(&self, i: usize) -> Vec<LinearForm> {
        let n = self.n;
        let mut map: Vec<LinearForm> = (0..n).map(|k| LinearForm::var(n, k)).collect();
        match i {
            0 => {
                let mut c = vec![Rational::zero(); n];
                c[0] = -Rational::one();
                map[0] = LinearForm::new(c, Rational::one());
            }
            i if i == n => {
                let mut c = vec![Rational::zero(); n];
                c[n - 1] = -Rational::one();
                map[n - 1] = LinearForm::new(c, Rational::zero());
            }
            i => map.swap(i - 1, i),
        }
        map
    }

    pub fn reflect(&self, i: usize, p: &SparsePoly) -> SparsePoly {
        p.affine_substitute(&self.reflection_map(i)).expect("dimensions agree")
    }

    /// `T_i p = χ_i s_i p + d_i (s_i p − p)`, with the difference quotient
    /// computed by exact division.
    fn t_direct(&self, i: usize, p: &SparsePoly) -> Result<SparsePoly> {
        let n = self.n;
        let pr = &self.params;
        let sp = self.reflect(i, p);
        let diff = &sp - p;
        let x = |k: usize| SparsePoly::var(n, k);
        let (den, numer) = match i {
            0 => {
                // d₀ = (t₀² − u₀² + (½ − x₁)²) / (1 − 2x₁)
                let mut c = vec![Rational::zero(); n];
                c[0] = int(-2);
                let l = LinearForm::new(c, Rational::one());
                let av = &SparsePoly::constant(n, half()) - &x(0);
                let num = &SparsePoly::constant(n, &pr.t0 * &pr.t0 - &pr.u0 * &pr.u0) + &(&av * &av);
                (l, num)
            }
            i if i == n => {
                // dₙ = (tₙ² − uₙ² + xₙ²) / (2xₙ)
                let mut c = vec![Rational::zero(); n];
                c[n - 1] = int(2);
                let l = LinearForm::new(c, Rational::zero());
                let num = &SparsePoly::constant(n, &pr.tn * &pr.tn - &pr.un * &pr.un) + &x(n - 1).pow(2);
                (l, num)
            }
            i => {
                let mut c = vec![Rational::zero(); n];
                c[i - 1] = Rational::one();
                c[i] = -Rational::one();
                (
                    LinearForm::new(c, Rational::zero()),
                    SparsePoly::constant(n, pr.t.clone()),
                )
            }
        };
        let quotient = divide_linear(&diff, &den)?;
        Ok(&sp.scale(&pr.chi(i, n)) + &(&numer * &quotient))
    }

    fn local_positions(&self, i: usize) -> (usize, usize) {
        match i {
            0 => (0, 0),
            i if i == self.n => (self.n - 1, self.n - 1),
            i => (i - 1, i),
        }
    }

    fn local_image(&self, g: Gen, i: usize, a: u16, b: u16) -> Arc<SparsePoly> {
        let key = (g, i, a, b);
        if let Some(img) = self.local.read().unwrap().get(&key) {
            return img.clone();
        }
        let n = self.n;
        let (pa, pb) = self.local_positions(i);
        let mut e = Exponent::from_elem(0, n);
        e[pa] = a;
        if pb != pa {
            e[pb] = b;
        }
        let mono = SparsePoly::monomial(n, e, Rational::one());
        let t = self
            .t_direct(i, &mono)
            .expect("generator action is polynomial (exact division cannot fail)");
        let img = match g {
            Gen::T => t,
            Gen::TVee if i == 0 => {
                // X₁ − ½ − T₀
                let x1 = &SparsePoly::var(n, 0) * &mono;
                &(&x1 - &mono.scale(&half())) - &t
            }
            Gen::TVee if i == n => {
                // −Xₙ − Tₙ
                let xn = &SparsePoly::var(n, n - 1) * &mono;
                -(&xn + &t)
            }
            Gen::TVee => t,
        };
        let img = Arc::new(img);
        self.local.write().unwrap().insert(key, img.clone());
        img
    }

    fn apply_gen(&self, g: Gen, i: usize, p: &SparsePoly) -> SparsePoly {
        assert!(i <= self.n, "generator index {i} out of range");
        let (pa, pb) = self.local_positions(i);
        let mut out = SparsePoly::zero(self.n);
        for (e, c) in p.terms() {
            let a = e[pa];
            let b = if pb != pa { e[pb] } else { 0 };
            let img = self.local_image(g, i, a, b);
            let mut rest = e.clone();
            rest[pa] = 0;
            rest[pb] = 0;
            for (ie, ic) in img.terms() {
                let ne: Exponent = ie.iter().zip(rest.iter()).map(|(x, y)| x + y).collect();
                out.add_term(ne, ic * c);
            }
        }
        out
    }

    pub fn apply_t(&self, i: usize, p: &SparsePoly) -> SparsePoly {
        self.apply_gen(Gen::T, i, p)
    }

    pub fn apply_tvee(&self, i: usize, p: &SparsePoly) -> SparsePoly {
        self.apply_gen(Gen::TVee, i, p)
    }

    /// `X_i p = x_i p` (1-based `i`).
    pub fn apply_x(&self, i: usize, p: &SparsePoly) -> SparsePoly {
        assert!((1..=self.n).contains(&i), "X index {i} out of range");
        let mut e = vec![0u16; self.n];
        e[i - 1] = 1;
        p.mul_monomial(&e)
    }

    fn apply_t_word(&self, letters: &[usize], p: &SparsePoly) -> SparsePoly {
        letters.iter().rev().fold(p.clone(), |acc, &i| self.apply_t(i, &acc))
    }

    /// Letters of `Ξ_{i,n} = T_i⋯T_{n−1} Tₙ T_{n−1}⋯T_i`.
    pub fn xi_in_word(i: usize, n: usize) -> Vec<usize> {
        let mut w: Vec<usize> = (i..n).collect();
        w.push(n);
        w.extend((i..n).rev());
        w
    }

    /// Letters of `Ξ_{0,i} = T_{i−1}⋯T₁ T₀ T₁⋯T_{i−1}`.
    pub fn xi_0i_word(i: usize) -> Vec<usize> {
        let mut w: Vec<usize> = (1..i).rev().collect();
        w.push(0);
        w.extend(1..i);
        w
    }

    /// Letters of `T_{i,j} = T_i⋯T_{j−1}⋯T_i`.
    pub fn t_ij_word(i: usize, j: usize) -> Vec<usize> {
        let mut w: Vec<usize> = (i..j).collect();
        w.extend((i..j - 1).rev());
        w
    }

    fn composite_monomial(&self, k: Composite, e: &Exponent) -> Arc<SparsePoly> {
        if let Some(img) = self.composite.read().unwrap().get(&(k, e.clone())) {
            return img.clone();
        }
        let n = self.n;
        let mono = SparsePoly::monomial(n, e.clone(), Rational::one());
        let img = match k {
            Composite::Y(i) => {
                let mut acc = self.apply_t_word(&Self::xi_in_word(i, n), &mono);
                acc = &acc + &self.apply_t_word(&Self::xi_0i_word(i), &mono);
                for j in i + 1..=n {
                    let tij = self.apply_t_word(&Self::t_ij_word(i, j), &mono);
                    acc = &acc + &tij.scale(&self.params.t);
                }
                acc
            }
            Composite::Un => {
                // rightmost letter first: T₁, …, Tₙ₋₁, then Tₙ∨, then Tₙ₋₁, …, T₁
                let mut acc = self.apply_t_word(&(1..n).rev().collect::<Vec<_>>(), &mono);
                acc = self.apply_tvee(n, &acc);
                self.apply_t_word(&(1..n).collect::<Vec<_>>(), &acc)
            }
        };
        let img = Arc::new(img);
        self.composite.write().unwrap().insert((k, e.clone()), img.clone());
        img
    }

    fn apply_composite(&self, k: Composite, p: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero(self.n);
        for (e, c) in p.terms() {
            let img = self.composite_monomial(k, e);
            for (ie, ic) in img.terms() {
                out.add_term(ie.clone(), ic * c);
            }
        }
        out
    }

    /// `Y_i = Ξ_{i,n} + Ξ_{0,i} + t Σ_{j>i} T_{i,j}` (1-based `i`).
    pub fn apply_y(&self, i: usize, p: &SparsePoly) -> SparsePoly {
        assert!((1..=self.n).contains(&i), "Y index {i} out of range");
        self.apply_composite(Composite::Y(i), p)
    }

    pub fn apply_un(&self, p: &SparsePoly) -> SparsePoly {
        self.apply_composite(Composite::Un, p)
    }

    /// `f(Y) p` for a polynomial `f` in `n` variables.
    pub fn apply_poly_in_y(&self, f: &SparsePoly, p: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero(self.n);
        for (e, c) in f.terms() {
            let mut acc = p.clone();
            for (k, &m) in e.iter().enumerate() {
                for _ in 0..m {
                    acc = self.apply_y(k + 1, &acc);
                }
            }
            out = &out + &acc.scale(c);
        }
        out
    }

    /// `a_i(Y)`: `1 − 2Y₁`, `Y_i − Y_{i+1}`, `2Yₙ`.
    pub fn apply_a_of_y(&self, i: usize, p: &SparsePoly) -> SparsePoly {
        let n = self.n;
        match i {
            0 => &p.clone() - &self.apply_y(1, p).scale(&int(2)),
            i if i == n => self.apply_y(n, p).scale(&int(2)),
            i => &self.apply_y(i, p) - &self.apply_y(i + 1, p),
        }
    }

    /// `T̃_i`: `Uₙ` for `i = 0`, `T_i` otherwise.
    pub fn apply_t_tilde(&self, i: usize, p: &SparsePoly) -> SparsePoly {
        if i == 0 {
            self.apply_un(p)
        } else {
            self.apply_t(i, p)
        }
    }

    /// Intertwiner `S_i p`. With `gamma` given, `p` is taken to be a joint
    /// `Y`-eigenfunction with that spectrum and the commutator collapses to
    /// `a_i(γ) T̃_i p − a_i(Y) T̃_i p`.
    pub fn apply_s(&self, i: usize, p: &SparsePoly, gamma: Option<&[Rational]>) -> SparsePoly {
        let tp = self.apply_t_tilde(i, p);
        let left = match gamma {
            Some(g) => tp.scale(&super::coeffs::a_i(i, g)),
            None => self.apply_t_tilde(i, &self.apply_a_of_y(i, p)),
        };
        &left - &self.apply_a_of_y(i, &tp)
    }

    pub fn apply(&self, op: &Op, p: &SparsePoly) -> SparsePoly {
        match op {
            Op::Identity => p.clone(),
            Op::T(i) => self.apply_t(*i, p),
            Op::TVee(i) => self.apply_tvee(*i, p),
            Op::X(i) => self.apply_x(*i, p),
            Op::Y(i) => self.apply_y(*i, p),
            Op::Un => self.apply_un(p),
            Op::S(i) => self.apply_s(*i, p, None),
            Op::Reflect(i) => self.reflect(*i, p),
            Op::MulPoly(f) => f * p,
            Op::PolyInY(f) => self.apply_poly_in_y(f, p),
            Op::Compose(v) => v.iter().rev().fold(p.clone(), |acc, o| self.apply(o, &acc)),
            Op::Sum(v) => {
                let mut out = SparsePoly::zero(self.n);
                for (c, o) in v {
                    out = out + self.apply(o, p).scale(c);
                }
                out
            }
        }
    }
}
