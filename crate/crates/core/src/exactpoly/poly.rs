use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::linear::LinearForm;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Exponent vector of a monomial, one entry per variable.
pub type Exponent = SmallVec<[u16; 4]>;

/// Sparse polynomial in `nvars` variables with exact rational coefficients.
///
/// Terms are kept in a `BTreeMap` so iteration (and therefore every derived
/// output) is in lexicographic exponent order. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Exponent, Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// One term of the JSON encoding: `{"exp": [...], "num": "...", "den": "..."}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u16>,
    pub num: String,
    pub den: String,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, Exponent::from_elem(0, nvars), c)
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut e = Exponent::from_elem(0, nvars);
        e[i] = 1;
        Self::monomial(nvars, e, Rational::one())
    }

    pub fn monomial(nvars: usize, exp: Exponent, c: Rational) -> Self {
        assert_eq!(exp.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        SparsePoly { nvars, terms }
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut p = SparsePoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exponent, Rational)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, exp: &[u16]) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0u16; self.nvars])
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().map(|&k| k as usize).sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<usize> {
        self.terms.keys().map(|e| e[var] as usize).max()
    }

    /// Accumulates `c * x^exp`, dropping the term if it cancels.
    pub fn add_term(&mut self, exp: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_dims(&self, other: &SparsePoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        Ok(())
    }

    /// Exact `p op q`; errors when the variable counts differ.
    pub fn arith(&self, other: &SparsePoly, op: ArithOp) -> Result<SparsePoly> {
        self.check_dims(other)?;
        Ok(match op {
            ArithOp::Add => self.add_unchecked(other, true),
            ArithOp::Sub => self.add_unchecked(other, false),
            ArithOp::Mul => self.mul_unchecked(other),
        })
    }

    fn add_unchecked(&self, other: &SparsePoly, plus: bool) -> SparsePoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let c = if plus { c.clone() } else { -c.clone() };
            out.add_term(e.clone(), c);
        }
        out
    }

    fn mul_unchecked(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^exp`.
    pub fn mul_monomial(&self, exp: &[u16]) -> SparsePoly {
        SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.iter().zip(exp).map(|(a, b)| a + b).collect(), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> SparsePoly {
        let mut acc = SparsePoly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.nvars);
        let mut powers: Vec<Vec<Rational>> = vec![vec![Rational::one()]; self.nvars];
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                let k = k as usize;
                while powers[i].len() <= k {
                    let next = powers[i].last().unwrap() * &x[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    term *= &powers[i][k];
                }
            }
            acc += term;
        }
        acc
    }

    /// Evaluation over any field that rationals embed into (floats, complex numbers).
    pub fn eval_with<T>(&self, x: &[T], embed: impl Fn(&Rational) -> T) -> T
    where
        T: Clone + Zero + One + std::ops::Mul<Output = T> + std::ops::AddAssign,
    {
        assert_eq!(x.len(), self.nvars);
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            let mut term = embed(c);
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term = term * x[i].clone();
                }
            }
            acc += term;
        }
        acc
    }

    /// `p ∘ map`: replaces `x_i` with the linear form `map[i]`.
    pub fn affine_substitute(&self, map: &[LinearForm]) -> Result<SparsePoly> {
        if map.len() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                got: map.len(),
            });
        }
        for m in map {
            if m.nvars() != self.nvars {
                return Err(Error::Dimension {
                    expected: self.nvars,
                    got: m.nvars(),
                });
            }
        }
        let images: Vec<SparsePoly> = map.iter().map(|l| l.to_poly()).collect();
        let mut powers: Vec<Vec<SparsePoly>> = vec![vec![SparsePoly::one(self.nvars)]; self.nvars];
        let mut out = SparsePoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut term = SparsePoly::constant(self.nvars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                let k = k as usize;
                while powers[i].len() <= k {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    term = &term * &powers[i][k];
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// `p(x + shift * e_var)`.
    pub fn shift_var(&self, var: usize, shift: &Rational) -> SparsePoly {
        let mut map: Vec<LinearForm> = (0..self.nvars).map(|i| LinearForm::var(self.nvars, i)).collect();
        map[var] = LinearForm::var(self.nvars, var).plus_constant(shift.clone());
        self.affine_substitute(&map).expect("dimensions agree")
    }

    /// Substitutes `x_i ↦ sign_i * x_{perm[i]}` (a signed permutation of variables).
    pub fn signed_permute(&self, perm: &[usize], signs: &[i8]) -> SparsePoly {
        let mut out = SparsePoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = Exponent::from_elem(0, self.nvars);
            let mut negate = false;
            for i in 0..self.nvars {
                ne[perm[i]] += e[i];
                if signs[i] < 0 && e[i] % 2 == 1 {
                    negate = !negate;
                }
            }
            out.add_term(ne, if negate { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Replaces every coefficient `c` with `f(c)`; used for exact parameter maps.
    pub fn map_coeffs(&self, f: impl Fn(&Rational) -> Rational) -> SparsePoly {
        SparsePoly::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Encoding as JSON terms sorted lexicographically by exponent.
    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(e, c)| TermJson {
                exp: e.to_vec(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(nvars: usize, terms: &[TermJson]) -> Result<SparsePoly> {
        let mut p = SparsePoly::zero(nvars);
        for t in terms {
            if t.exp.len() != nvars {
                return Err(Error::Dimension {
                    expected: nvars,
                    got: t.exp.len(),
                });
            }
            let num: BigInt = t
                .num
                .parse()
                .map_err(|_| Error::Config(format!("bad numerator {:?}", t.num)))?;
            let den: BigInt = t
                .den
                .parse()
                .map_err(|_| Error::Config(format!("bad denominator {:?}", t.den)))?;
            if den.is_zero() || den.is_negative() {
                return Err(Error::Config(format!("bad denominator {:?}", t.den)));
            }
            p.add_term(t.exp.iter().copied().collect(), Rational::new(num, den));
        }
        Ok(p)
    }
}

impl Serialize for SparsePoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest degree first reads more naturally
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let is_const = e.iter().all(|&d| d == 0);
            if !mag.is_one() || is_const {
                write!(f, "{mag}")?;
            }
            let mut first = mag.is_one();
            for (i, &d) in e.iter().enumerate() {
                if d == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "x{}", i + 1)?;
                if d > 1 {
                    write!(f, "^{d}")?;
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.arith(rhs, ArithOp::Add).expect("nvars mismatch")
    }
}

impl<'a> Sub<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self.arith(rhs, ArithOp::Sub).expect("nvars mismatch")
    }
}

impl<'a> Mul<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.arith(rhs, ArithOp::Mul).expect("nvars mismatch")
    }
}

impl Add for SparsePoly {
    type Output = SparsePoly;
    fn add(mut self, rhs: SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, rhs.nvars, "nvars mismatch");
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for SparsePoly {
    type Output = SparsePoly;
    fn sub(mut self, rhs: SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, rhs.nvars, "nvars mismatch");
        for (e, c) in rhs.terms {
            self.add_term(e, -c);
        }
        self
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&-Rational::one())
    }
}

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        (&self).neg()
    }
}
