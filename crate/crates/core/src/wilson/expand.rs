//! Expansion in the basis `{E(·,γ_λ)}`, the algebraic inner product and the
//! finite Fourier pair.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::{weights_of_degree_up_to, WilsonEngine};
use crate::error::{Error, Result};
use crate::exactpoly::{format_rational, linalg, Rational, SparsePoly};
use crate::operators::monomials_up_to;
use crate::weyl::Weight;

/// Normalization of the form: `c = ⟨1,1⟩`, or 1 in unit-mass mode.
#[derive(Clone, Debug)]
pub enum Mass {
    Unit,
    Absolute(Rational),
}

impl Mass {
    fn value(&self) -> Rational {
        match self {
            Mass::Unit => Rational::from_integer(1.into()),
            Mass::Absolute(c) => c.clone(),
        }
    }
}

/// A finitely supported function on `Spec(−Y)`, indexed by λ ↔ `−γ_λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FiniteSpectralFunction {
    #[serde(serialize_with = "ser_values")]
    pub values: BTreeMap<Weight, Rational>,
}

fn ser_values<S: serde::Serializer>(v: &BTreeMap<Weight, Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for (k, r) in v {
        seq.serialize_element(&(k, format_rational(r)))?;
    }
    seq.end()
}

impl FiniteSpectralFunction {
    /// `δ_λ`.
    pub fn delta(lambda: &[i64]) -> Self {
        let mut values = BTreeMap::new();
        values.insert(lambda.to_vec(), Rational::from_integer(1.into()));
        FiniteSpectralFunction { values }
    }

    pub fn get(&self, lambda: &[i64]) -> Rational {
        self.values.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Drops explicit zeros so that equality means equality of functions.
    fn normalized(mut self) -> Self {
        self.values.retain(|_, v| !v.is_zero());
        self
    }
}

impl WilsonEngine {
    /// Coefficients `f̂_μ` with `f = Σ f̂_μ E(·,γ_μ)`, solved exactly on the
    /// degree filtration level of `f`.
    pub fn expand_in_e(&self, f: &SparsePoly) -> Result<BTreeMap<Weight, Rational>> {
        let n = self.n();
        if f.nvars() != n {
            return Err(Error::Dimension {
                expected: n,
                got: f.nvars(),
            });
        }
        let Some(deg) = f.total_degree() else {
            return Ok(BTreeMap::new());
        };
        let basis = weights_of_degree_up_to(n, deg);
        let monos = monomials_up_to(n, deg);
        debug_assert_eq!(basis.len(), monos.len());
        let es = basis.iter().map(|l| self.e(l)).collect::<Result<Vec<_>>>()?;
        let a: Vec<Vec<Rational>> = monos.iter().map(|m| es.iter().map(|e| e.coeff(m)).collect()).collect();
        let b: Vec<Rational> = monos.iter().map(|m| f.coeff(m)).collect();
        let sol = linalg::solve(&a, &b).ok_or_else(|| {
            Error::Degenerate(format!("E-basis of degree ≤ {deg} is singular; change the parameters"))
        })?;
        Ok(basis.into_iter().zip(sol).filter(|(_, c)| !c.is_zero()).collect())
    }

    /// Whether the `E_λ` of degree `≤ deg` form a basis of the polynomials of degree `≤ deg`.
    pub fn basis_is_complete(&self, deg: usize) -> Result<bool> {
        let n = self.n();
        let basis = weights_of_degree_up_to(n, deg);
        let monos = monomials_up_to(n, deg);
        if basis.len() != monos.len() {
            return Ok(false);
        }
        let es = basis.iter().map(|l| self.e(l)).collect::<Result<Vec<_>>>()?;
        let a: Vec<Vec<Rational>> = monos.iter().map(|m| es.iter().map(|e| e.coeff(m)).collect()).collect();
        Ok(linalg::rank(&a) == monos.len())
    }

    /// `⟨f,g⟩ = Σ f̂_λ ĝ_λ c/ν_λ`.
    pub fn alg_inner(&self, f: &SparsePoly, g: &SparsePoly, mass: &Mass) -> Result<Rational> {
        let fh = self.expand_in_e(f)?;
        let gh = self.expand_in_e(g)?;
        let c = mass.value();
        let mut acc = Rational::zero();
        for (l, a) in &fh {
            if let Some(b) = gh.get(l) {
                acc += a * b * &c / &self.record(l)?.rel_norm;
            }
        }
        Ok(acc)
    }

    /// `(Ff)(−γ_λ) = ⟨f, E_λ⟩ = f̂_λ c/ν_λ`.
    pub fn fourier_f(&self, f: &SparsePoly, mass: &Mass) -> Result<FiniteSpectralFunction> {
        let c = mass.value();
        let mut values = BTreeMap::new();
        for (l, a) in self.expand_in_e(f)? {
            let nu = self.record(&l)?.rel_norm.clone();
            values.insert(l, a * &c / nu);
        }
        Ok(FiniteSpectralFunction { values }.normalized())
    }

    /// `(Gg)(x) = Σ g(−γ_λ) E(x,γ_λ) ν_λ/c`.
    pub fn fourier_g(&self, g: &FiniteSpectralFunction, mass: &Mass) -> Result<SparsePoly> {
        let c = mass.value();
        let mut out = SparsePoly::zero(self.n());
        for (l, v) in &g.values {
            let r = self.record(l)?;
            out = out + r.e.scale(&(v * &r.rel_norm / &c));
        }
        Ok(out)
    }

    /// `[g₁,g₂] = Σ g₁(−γ_λ) g₂(−γ_λ) ν_λ/c`.
    pub fn spectral_pairing(
        &self,
        g1: &FiniteSpectralFunction,
        g2: &FiniteSpectralFunction,
        mass: &Mass,
    ) -> Result<Rational> {
        let c = mass.value();
        let mut acc = Rational::zero();
        for (l, a) in &g1.values {
            if let Some(b) = g2.values.get(l) {
                acc += a * b * &self.record(l)?.rel_norm / &c;
            }
        }
        Ok(acc)
    }
}
