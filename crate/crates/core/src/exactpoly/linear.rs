use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::poly::{Exponent, SparsePoly};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Affine-linear form `Σ c_i x_i + c_0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearForm {
    coeffs: Vec<Rational>,
    constant: Rational,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>, constant: Rational) -> Self {
        LinearForm { coeffs, constant }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); nvars];
        coeffs[i] = Rational::one();
        LinearForm {
            coeffs,
            constant: Rational::zero(),
        }
    }

    pub fn plus_constant(mut self, c: Rational) -> Self {
        self.constant += c;
        self
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.coeffs
            .iter()
            .zip(x)
            .fold(self.constant.clone(), |acc, (c, v)| acc + c * v)
    }

    pub fn to_poly(&self) -> SparsePoly {
        let n = self.nvars();
        let mut p = SparsePoly::constant(n, self.constant.clone());
        for (i, c) in self.coeffs.iter().enumerate() {
            let mut e = Exponent::from_elem(0, n);
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// Exact quotient `p / ℓ`.
///
/// Synthetic division in a distinguished variable `x_j` of `ℓ = c_j x_j + r(x')`:
/// `p` is viewed as a polynomial in `x_j` with coefficients in the remaining
/// variables and divided by `x_j - ρ`, `ρ = -r / c_j`. A nonzero remainder
/// means `p` does not vanish on `{ℓ = 0}` and is returned as the error witness.
pub fn divide_linear(p: &SparsePoly, l: &LinearForm) -> Result<SparsePoly> {
    let n = p.nvars();
    if l.nvars() != n {
        return Err(Error::Dimension {
            expected: n,
            got: l.nvars(),
        });
    }
    if l.is_zero() {
        return Err(Error::ZeroLinearForm);
    }
    let Some(j) = (0..n).rev().find(|&i| !l.coeffs[i].is_zero()) else {
        // nonzero constant
        let inv = l.constant.recip();
        return Ok(p.scale(&inv));
    };
    if p.is_zero() {
        return Ok(SparsePoly::zero(n));
    }
    let cj = l.coeffs[j].clone();
    // ρ = -(ℓ - c_j x_j) / c_j, a polynomial free of x_j
    let mut rho = SparsePoly::constant(n, -l.constant.clone() / &cj);
    for (i, c) in l.coeffs.iter().enumerate() {
        if i != j && !c.is_zero() {
            rho.add_term(unit(n, i), -c.clone() / &cj);
        }
    }

    // split p by powers of x_j
    let mut slices: BTreeMap<u16, SparsePoly> = BTreeMap::new();
    for (e, c) in p.terms() {
        let mut rest = e.clone();
        let k = rest[j];
        rest[j] = 0;
        slices
            .entry(k)
            .or_insert_with(|| SparsePoly::zero(n))
            .add_term(rest, c.clone());
    }
    let deg = *slices.keys().next_back().unwrap();
    let slice = |k: u16| slices.get(&k).cloned().unwrap_or_else(|| SparsePoly::zero(n));

    // q_{k-1} = P_k + ρ q_k, starting from q_{deg-1} = P_deg
    let mut quotient = SparsePoly::zero(n);
    let mut carry = SparsePoly::zero(n);
    for k in (1..=deg).rev() {
        let qk = &slice(k) + &(&rho * &carry);
        let mut e = Exponent::from_elem(0, n);
        e[j] = k - 1;
        quotient = &quotient + &qk.mul_monomial(&e);
        carry = qk;
    }
    let remainder = &slice(0) + &(&rho * &carry);
    if !remainder.is_zero() {
        return Err(Error::NotDivisible {
            divisor: l.to_string(),
            remainder: Box::new(remainder),
        });
    }
    Ok(quotient.scale(&cj.recip()))
}

fn unit(n: usize, i: usize) -> Exponent {
    let mut e = Exponent::from_elem(0, n);
    e[i] = 1;
    e
}
