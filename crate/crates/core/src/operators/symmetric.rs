//! The symmetrizer `C⁺ = V⁺ c₊(X)` and the second-order difference operator `L`
//! diagonalized by the symmetric Wilson polynomials.

use num_traits::{One, Zero};

use super::coeffs::{c_plus_numer_poly, negative_finite_roots};
use super::params::Params;
use crate::error::{Error, Result};
use crate::exactpoly::{
    default_offsets, divide_linear, grid_verify_zero, int, interpolate_tensor, LinearForm, Rational, SparsePoly,
};
use crate::weyl::finite_weyl_group;

fn act(w: &crate::weyl::SignedPerm, p: &SparsePoly) -> SparsePoly {
    p.signed_permute(&w.perm, &w.signs)
}

/// Whether `p` is invariant under the hyperoctahedral group.
pub fn is_w0_invariant(p: &SparsePoly) -> bool {
    finite_weyl_group(p.nvars()).iter().all(|w| act(w, p) == *p)
}

/// `C⁺p = Σ_w det(w) w(N p) / (|W₀| m)` with `N = c₊ m`.
///
/// The alternating sum is divisible by every root factor of `m`; each division
/// is exact and a nonzero remainder is reported as an internal failure.
pub fn symmetrize_cplus(p: &SparsePoly, params: &Params) -> Result<SparsePoly> {
    let n = p.nvars();
    let np = &c_plus_numer_poly(n, params) * p;
    let group = finite_weyl_group(n);
    let mut alt = SparsePoly::zero(n);
    for w in &group {
        let term = act(w, &np);
        alt = if w.det() > 0 { alt + term } else { alt - term };
    }
    for a in negative_finite_roots(n) {
        let coeffs = a.v.iter().map(|&v| int(v)).collect();
        let l = LinearForm::new(coeffs, int(a.c));
        alt = divide_linear(&alt, &l).map_err(|e| Error::Consistency(format!("C⁺ division by {a}: {e}")))?;
    }
    Ok(alt.scale(&int(group.len() as i64).recip()))
}

fn wilson_a(params: &Params, x: &[Rational], i: usize) -> Result<Rational> {
    let [a, b, c, d] = params.wilson_abcd();
    let xi = &x[i];
    let two = int(2);
    let mut num = (&a + xi) * (&b + xi) * (&c + xi) * (&d + xi);
    let mut den = &two * xi * (&two * xi + Rational::one());
    for (j, xj) in x.iter().enumerate() {
        if j != i {
            num *= (&params.t + xi + xj) * (&params.t + xi - xj);
            den *= (xi + xj) * (xi - xj);
        }
    }
    if den.is_zero() {
        return Err(Error::Pole(format!("A_{} at {x:?}", i + 1)));
    }
    Ok(num / den)
}

/// Coefficient `A_i(x)` of `L`, 0-based `i`.
pub fn wilson_operator_coeff(params: &Params, x: &[Rational], i: usize) -> Result<Rational> {
    wilson_a(params, x, i)
}

/// `(Lp)(x)` at one point, with `shift = ±1` selecting the direction of the
/// translation attached to `A_i(x)`.
pub fn l_at(p: &SparsePoly, params: &Params, x: &[Rational], shift: i64) -> Result<Rational> {
    let px = p.eval(x);
    let mut acc = Rational::zero();
    let mx: Vec<Rational> = x.iter().map(|v| -v.clone()).collect();
    for i in 0..x.len() {
        let mut up = x.to_vec();
        up[i] += int(shift);
        let mut down = x.to_vec();
        down[i] -= int(shift);
        acc += wilson_a(params, x, i)? * (p.eval(&up) - &px);
        acc += wilson_a(params, &mx, i)? * (p.eval(&down) - &px);
    }
    Ok(acc)
}

/// `∏_i x_i(4x_i²−1) ∏_{i<j}(x_i²−x_j²)`, clearing every denominator of `L`.
fn l_denominator(x: &[Rational]) -> Rational {
    let mut d = Rational::one();
    for (i, xi) in x.iter().enumerate() {
        d *= xi * (int(4) * xi * xi - Rational::one());
        for xj in &x[i + 1..] {
            d *= xi * xi - xj * xj;
        }
    }
    d
}

fn l_denominator_degree(n: usize) -> usize {
    3 * n + n * (n - 1)
}

/// `Lp = Σ_i A_i(x)(p(x+ε_i)−p(x)) + A_i(−x)(p(x−ε_i)−p(x))` for invariant `p`.
///
/// The result is interpolated on a tensor grid and then certified: the
/// denominator-cleared residual has per-variable degree below the grid size,
/// so vanishing on the grid proves it is zero.
pub fn apply_l_sym(p: &SparsePoly, params: &Params) -> Result<SparsePoly> {
    apply_l_shift(p, params, 1)
}

/// `L` with the translation direction chosen by `shift` (`+1` as in
/// [`apply_l_sym`], `−1` for `A_i(x)` paired with `x−ε_i`).
pub fn apply_l_shift(p: &SparsePoly, params: &Params, shift: i64) -> Result<SparsePoly> {
    if !is_w0_invariant(p) {
        return Err(Error::Precondition("L acts on W₀-invariant polynomials".into()));
    }
    let n = p.nvars();
    let deg = p.total_degree().unwrap_or(0);
    let offsets = default_offsets(n);
    let lp = interpolate_tensor(n, deg + 1, Some(&offsets), |x| l_at(p, params, x, shift))?;
    let bound = deg + l_denominator_degree(n) + 1;
    let certified = grid_verify_zero(n, bound, Some(&offsets), |x| {
        Ok(l_denominator(x) * (l_at(p, params, x, shift)? - lp.eval(x)))
    })?;
    if !certified {
        return Err(Error::Consistency(format!(
            "L applied with shift {shift} is not a polynomial of degree ≤ {deg}"
        )));
    }
    Ok(lp)
}

/// `Σ_i λ_i(λ_i + a+b+c+d − 1 + 2(n−i)t)` for dominant λ.
pub fn l_eigenvalue(lambda: &[i64], params: &Params) -> Rational {
    let [a, b, c, d] = params.wilson_abcd();
    let s = a + b + c + d - Rational::one();
    let n = lambda.len();
    lambda
        .iter()
        .enumerate()
        .map(|(k, &l)| {
            let i = k + 1;
            int(l) * (int(l) + &s + int(2 * (n - i) as i64) * &params.t)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::q;
    use crate::operators::coeffs::c_plus;
    use crate::operators::Representation;

    fn x(n: usize, i: usize) -> SparsePoly {
        SparsePoly::var(n, i)
    }

    #[test]
    fn cplus_on_invariant_is_scalar() {
        let p = Params::p_star();
        let f = &x(2, 0).pow(2) + &x(2, 1).pow(2);
        let x0: Vec<Rational> = p.sigma().gamma0(2).iter().map(|v| -v.clone()).collect();
        let k = c_plus(&x0, &p).unwrap() / int(8);
        assert_eq!(symmetrize_cplus(&f, &p).unwrap(), f.scale(&k));
    }

    #[test]
    fn cplus_image_is_invariant() {
        let p = Params::p_alt();
        let img = symmetrize_cplus(&x(2, 0), &p).unwrap();
        assert!(is_w0_invariant(&img));
        assert!(!img.is_zero());
    }

    #[test]
    fn cplus_absorbs_t_i() {
        let p = Params::p_star();
        let rep = Representation::new(2, p.clone());
        let f = &(&x(2, 0).pow(3) * &x(2, 1)) + &x(2, 1).scale(&q(3, 7));
        for i in 1..=2 {
            let lhs = symmetrize_cplus(&rep.apply_t(i, &f), &p).unwrap();
            let rhs = symmetrize_cplus(&f, &p).unwrap().scale(&p.chi(i, 2));
            assert_eq!(lhs, rhs, "i = {i}");
        }
    }

    #[test]
    fn l_kills_constants() {
        let p = Params::p_star();
        assert!(apply_l_sym(&SparsePoly::one(2), &p).unwrap().is_zero());
    }

    #[test]
    fn l_rejects_non_invariant() {
        let p = Params::p_star();
        assert!(matches!(apply_l_sym(&x(2, 0), &p), Err(Error::Precondition(_))));
    }
}
