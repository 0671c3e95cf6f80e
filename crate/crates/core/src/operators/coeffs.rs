//! Rational coefficient functions `c_α`, `d_i`, `q_i`, `K_α`, `c₊` and `m`.

use num_traits::{One, Zero};

use super::params::Params;
use crate::error::{Error, Result};
use crate::exactpoly::{half, int, Rational, SparsePoly};
use crate::weyl::{classify_orbit, finite_roots, simple_root, AffineRoot, Orbit};

fn nonzero(den: Rational, what: impl FnOnce() -> String) -> Result<Rational> {
    if den.is_zero() {
        Err(Error::Pole(what()))
    } else {
        Ok(den)
    }
}

/// Numerator of `c_α(x)`: `(𝐭(α)+𝐭(α∨)+α∨(x))(𝐭(α)−𝐭(α∨)+α∨(x))` for long
/// roots (`α∨ = α/2`) and `𝐭(α)+α(x)` for short ones.
pub fn c_alpha_numer(alpha: &AffineRoot, x: &[Rational], p: &Params) -> Result<Rational> {
    let ax = alpha.eval(x);
    Ok(match classify_orbit(alpha)? {
        Orbit::Mid => &p.t + ax,
        orbit => {
            let (ta, tv) = p.long_pair(orbit);
            let av = ax * half();
            (&ta + &tv + &av) * (&ta - &tv + &av)
        }
    })
}

/// `c_α(x; 𝐭)`.
pub fn c_alpha(alpha: &AffineRoot, x: &[Rational], p: &Params) -> Result<Rational> {
    let den = nonzero(alpha.eval(x), || format!("α(x) = 0 for α = {alpha}"))?;
    Ok(c_alpha_numer(alpha, x, p)? / den)
}

/// `c_i = c_{a_i}`.
pub fn c_i(i: usize, x: &[Rational], p: &Params) -> Result<Rational> {
    c_alpha(&simple_root(i, x.len()), x, p)
}

/// `d_i = c_i − χ_i`.
pub fn d_i(i: usize, x: &[Rational], p: &Params) -> Result<Rational> {
    Ok(c_i(i, x, p)? - p.chi(i, x.len()))
}

/// `a_i(x)` for the simple root `a_i`.
pub fn a_i(i: usize, x: &[Rational]) -> Rational {
    simple_root(i, x.len()).eval(x)
}

/// The polynomial `a_i(x)`.
pub fn a_i_poly(i: usize, n: usize) -> SparsePoly {
    let r = simple_root(i, n);
    let mut p = SparsePoly::constant(n, int(r.c));
    for (k, &v) in r.v.iter().enumerate() {
        if v != 0 {
            p = &p + &SparsePoly::var(n, k).scale(&int(v));
        }
    }
    p
}

/// `q_i(x)`, the eigenvalue function of `S_i²` (with `S_i² = q_i(Y)`):
/// `4((uₙ+u₀)²−(½+x₁)²)((uₙ−u₀)²−(½+x₁)²)` for `i = 0`, `4(t²−a_i(x)²)` in
/// the middle and `4((tₙ+t₀)²−xₙ²)((tₙ−t₀)²−xₙ²)` for `i = n`.
pub fn q_i_poly(i: usize, n: usize, p: &Params) -> SparsePoly {
    let c = |v: Rational| SparsePoly::constant(n, v);
    let sq = |v: &Rational| v * v;
    match i {
        0 => {
            let h = &c(half()) + &SparsePoly::var(n, 0);
            let h2 = &h * &h;
            let f1 = &c(sq(&(&p.un + &p.u0))) - &h2;
            let f2 = &c(sq(&(&p.un - &p.u0))) - &h2;
            (&f1 * &f2).scale(&int(4))
        }
        i if i == n => {
            let x2 = SparsePoly::var(n, n - 1).pow(2);
            let f1 = &c(sq(&(&p.tn + &p.t0))) - &x2;
            let f2 = &c(sq(&(&p.tn - &p.t0))) - &x2;
            (&f1 * &f2).scale(&int(4))
        }
        i => {
            let a = a_i_poly(i, n);
            (&c(sq(&p.t)) - &(&a * &a)).scale(&int(4))
        }
    }
}

pub fn q_i(i: usize, x: &[Rational], p: &Params) -> Rational {
    q_i_poly(i, x.len(), p).eval(x)
}

/// `K_α(x) = 2(−α)(x) c^σ_α(x)`, the factor picked up by the value at `−x₀`
/// when an intertwiner is applied. For affine roots `(−α)(x) = −α(x)` differs
/// from `α(−x)`; only the former matches the intertwiner recursion.
pub fn k_alpha(alpha: &AffineRoot, x: &[Rational], p: &Params) -> Result<Rational> {
    Ok(int(-2) * alpha.eval(x) * c_alpha(alpha, x, &p.sigma())?)
}

/// Negative finite roots `Σ⁻` as affine roots with zero δ-part.
pub fn negative_finite_roots(n: usize) -> Vec<AffineRoot> {
    finite_roots(n)
        .into_iter()
        .map(|v| AffineRoot::new(v, 0))
        .filter(|a| !a.is_positive())
        .collect()
}

/// `c₊(x) = ∏_{α ∈ Σ⁻} c_α(x)`.
pub fn c_plus(x: &[Rational], p: &Params) -> Result<Rational> {
    let mut acc = Rational::one();
    for a in negative_finite_roots(x.len()) {
        acc *= c_alpha(&a, x, p)?;
    }
    Ok(acc)
}

/// `m(x) = ∏_{α ∈ Σ⁻} α(x)` as a polynomial.
pub fn m_poly(n: usize) -> SparsePoly {
    negative_finite_roots(n)
        .iter()
        .fold(SparsePoly::one(n), |acc, a| &acc * &root_poly(a))
}

/// `N = c₊·m`, the polynomial numerator of `c₊`.
pub fn c_plus_numer_poly(n: usize, p: &Params) -> SparsePoly {
    let mut acc = SparsePoly::one(n);
    for a in negative_finite_roots(n) {
        let ap = root_poly(&a);
        let factor = match classify_orbit(&a).expect("finite root") {
            Orbit::Mid => &SparsePoly::constant(n, p.t.clone()) + &ap,
            orbit => {
                let (ta, tv) = p.long_pair(orbit);
                let av = ap.scale(&half());
                let f1 = &SparsePoly::constant(n, &ta + &tv) + &av;
                let f2 = &SparsePoly::constant(n, &ta - &tv) + &av;
                &f1 * &f2
            }
        };
        acc = &acc * &factor;
    }
    acc
}

/// The affine function `α(x)` as a polynomial.
pub fn root_poly(a: &AffineRoot) -> SparsePoly {
    let n = a.v.len();
    let mut p = SparsePoly::constant(n, int(a.c));
    for (k, &v) in a.v.iter().enumerate() {
        if v != 0 {
            p = &p + &SparsePoly::var(n, k).scale(&int(v));
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::q;

    #[test]
    fn short_root_at_unit_value() {
        let p = Params::p_star();
        // a_1(x) = 1 at x = (3/2, 1/2)
        let x = vec![q(3, 2), q(1, 2)];
        assert_eq!(c_i(1, &x, &p).unwrap(), &p.t + int(1));
    }

    #[test]
    fn c_plus_reflected_sums_to_two_chi() {
        let p = Params::p_alt();
        let n = 3;
        let pts = [
            vec![q(1, 3), q(2, 7), q(-5, 11)],
            vec![q(9, 4), q(-1, 6), q(3, 13)],
            vec![q(-7, 5), q(4, 9), q(1, 17)],
        ];
        for x in &pts {
            for i in 0..=n {
                let a = simple_root(i, n);
                let s = c_alpha(&a, x, &p).unwrap() + c_alpha(&a.neg(), x, &p).unwrap();
                assert_eq!(s, int(2) * p.chi(i, n));
            }
        }
    }

    #[test]
    fn pole_is_reported() {
        let p = Params::p_star();
        let x = vec![q(1, 2), q(1, 2)];
        assert!(matches!(c_i(1, &x, &p), Err(Error::Pole(_))));
    }

    #[test]
    fn c_plus_numerator_matches_product() {
        let p = Params::p_star();
        let n = 2;
        let x = vec![q(2, 7), q(5, 3)];
        let lhs = c_plus(&x, &p).unwrap() * m_poly(n).eval(&x);
        assert_eq!(lhs, c_plus_numer_poly(n, &p).eval(&x));
    }
}
