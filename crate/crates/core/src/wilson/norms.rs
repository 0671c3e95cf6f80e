//! Norm ratios `ν_λ = ⟨1,1⟩/⟨E_λ,E_λ⟩` and their symmetric counterpart.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{neg, WilsonEngine};
use crate::error::{Error, Result};
use crate::exactpoly::{format_rational, Rational};
use crate::operators::coeffs::{c_alpha, c_plus, q_i};
use crate::weyl::{
    dot_letter_int, inversion_set, phi, raises, simple_root, tau_inversion_set, u_lambda_word, u_length, weights_up_to,
    AffineRoot, Weight,
};

/// One raising edge `λ → s_i·λ` of the norm telescoping check.
#[derive(Clone, Debug, Serialize)]
pub struct NormStep {
    pub lambda: Weight,
    pub letter: usize,
    /// `⟨E_λ,E_λ⟩/⟨E_{s_i·λ},E_{s_i·λ}⟩` from the intertwiner: `−b²/q_i(γ_λ)` with `S_iE_λ = b E_{s_i·λ}`.
    pub from_intertwiner: String,
    /// The same ratio from the closed form `c^σ_{a_i}(−γ_λ)/c^σ_{−a_i}(−γ_λ)`.
    pub from_lemma: String,
    /// `ν_{s_i·λ}/ν_λ` from the product formula.
    pub from_product: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct NormReport {
    pub steps: Vec<NormStep>,
    /// Every weight reached by two different raising edges gets the same telescoped value.
    pub path_independent: bool,
    pub holds: bool,
}

impl WilsonEngine {
    /// `c^σ_{−α}(x)/c^σ_α(x)`.
    fn c_ratio(&self, a: &AffineRoot, x: &[Rational]) -> Result<Rational> {
        let s = self.params().sigma();
        let pole = |e| Error::Degenerate(format!("norm factor for {a}: {e}"));
        let num = c_alpha(&a.neg(), x, &s).map_err(pole)?;
        let den = c_alpha(a, x, &s).map_err(pole)?;
        if den.is_zero() {
            return Err(Error::Degenerate(format!("c^σ_{a} vanishes at {x:?}")));
        }
        Ok(num / den)
    }

    /// `ν_λ = ∏ c^σ_{−α}(−γ_λ)/c^σ_α(−γ_λ)` over the inversion set of `u_λ`.
    ///
    /// The product is evaluated at `−γ_λ`, the point of `Spec(−Y)` attached to λ;
    /// this is the reading under which it telescopes the intertwiner ratios.
    pub fn relative_norm(&self, lambda: &[i64]) -> Result<Rational> {
        let mg = neg(&self.gamma_point(lambda));
        let mut acc = Rational::one();
        for a in inversion_set(&u_lambda_word(lambda), self.n())? {
            acc *= self.c_ratio(&a, &mg)?;
        }
        Ok(acc)
    }

    /// `⟨E_λ,E_λ⟩/⟨E_{s_i·λ},E_{s_i·λ}⟩ = c^σ_{a_i}(−γ_λ)/c^σ_{−a_i}(−γ_λ)`.
    pub fn stepwise_norm_ratio(&self, lambda: &[i64], i: usize) -> Result<Rational> {
        let a = simple_root(i, self.n());
        Ok(self.c_ratio(&a, &neg(&self.gamma_point(lambda)))?.recip())
    }

    /// The same ratio read off from the operators alone: `S_i` is antisymmetric
    /// for the form, so `‖S_iE_λ‖² = −q_i(γ_λ)‖E_λ‖²`.
    pub fn intertwiner_norm_ratio(&self, lambda: &[i64], i: usize) -> Result<Rational> {
        let r = self.record(lambda)?;
        let mu = dot_letter_int(i, lambda);
        if mu == lambda {
            return Err(Error::Precondition(format!("s_{i} fixes {lambda:?}")));
        }
        let rm = self.record(&mu)?;
        let image = self.rep().apply_s(i, &r.e, Some(&r.gamma));
        let lead = phi(&mu);
        let b = image.coeff(&lead) / rm.e.coeff(&lead);
        if image != rm.e.scale(&b) {
            return Err(Error::Consistency(format!(
                "S_{i}E_{lambda:?} is not a multiple of E_{mu:?}"
            )));
        }
        let q = q_i(i, &r.gamma, self.params());
        if q.is_zero() {
            return Err(Error::Degenerate(format!("q_{i}(γ_{lambda:?}) = 0")));
        }
        Ok(-(&b * &b) / q)
    }

    /// Checks every raising edge inside `Σ|λ_i| ≤ radius`: intertwiner ratio,
    /// closed-form ratio and product formula agree, and telescoping from 0 is
    /// independent of the path.
    pub fn norm_consistency(&self, radius: i64) -> Result<NormReport> {
        let n = self.n();
        let mut order = weights_up_to(n, radius);
        order.sort_by_key(|l| u_length(l));
        let mut telescoped: HashMap<Weight, Rational> = HashMap::from([(vec![0; n], Rational::one())]);
        let mut path_independent = true;
        let mut steps = Vec::new();
        for l in &order {
            for i in 0..=n {
                let mu = dot_letter_int(i, l);
                if raises(i, l) != Some(true) || crate::weyl::abs_sum(&mu) > radius {
                    continue;
                }
                let eng = self.intertwiner_norm_ratio(l, i)?;
                let lem = self.stepwise_norm_ratio(l, i)?;
                let prod = self.relative_norm(&mu)? / self.relative_norm(l)?;
                let value = &telescoped[l] * &eng;
                match telescoped.get(&mu) {
                    Some(old) => path_independent &= *old == value,
                    None => {
                        telescoped.insert(mu.clone(), value);
                    }
                }
                steps.push(NormStep {
                    lambda: l.clone(),
                    letter: i,
                    holds: eng == lem && eng == prod,
                    from_intertwiner: format_rational(&eng),
                    from_lemma: format_rational(&lem),
                    from_product: format_rational(&prod),
                });
            }
        }
        let holds = path_independent && steps.iter().all(|s| s.holds);
        Ok(NormReport {
            steps,
            path_independent,
            holds,
        })
    }

    /// Rational part of `N₊(γ_λ)` (everything except `1/⟨1,1⟩₊`):
    /// `c₊^σ(−γ₀)/c₊^σ(−γ_λ) · ∏ c^σ_{−α}(−γ_λ)/c^σ_α(−γ_λ)` over the roots
    /// inverted by `τ(λ)`, for dominant λ. This is the reading that reproduces
    /// `⟨1,1⟩/⟨E⁺,E⁺⟩` computed from the nonsymmetric expansion.
    pub fn relative_norm_plus(&self, lambda: &[i64]) -> Result<Rational> {
        let n = self.n();
        let s = self.params().sigma();
        let mg = neg(&self.gamma_point(lambda));
        let mg0 = neg(&self.params().gamma0(n));
        let pole = |e| Error::Degenerate(format!("symmetric norm: {e}"));
        let num = c_plus(&mg0, &s).map_err(pole)?;
        let den = c_plus(&mg, &s).map_err(pole)?;
        if den.is_zero() {
            return Err(Error::Degenerate(format!("c₊^σ(−γ_{lambda:?}) = 0")));
        }
        let mut acc = num / den;
        for a in tau_inversion_set(lambda)? {
            acc *= self.c_ratio(&a, &mg)?;
        }
        Ok(acc)
    }
}
