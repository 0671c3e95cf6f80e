//! Symmetric Wilson polynomials `E⁺(·,γ_λ)` for dominant λ.

use num_traits::Zero;

use super::{neg, WilsonEngine};
use crate::error::{Error, Result};
use crate::exactpoly::{int, Rational, SparsePoly};
use crate::operators::coeffs::c_plus;
use crate::operators::{apply_l_sym, is_w0_invariant, l_eigenvalue, symmetrize_cplus};
use crate::weyl::{finite_orbit, is_dominant};

impl WilsonEngine {
    fn require_dominant(lambda: &[i64]) -> Result<()> {
        if is_dominant(lambda) {
            Ok(())
        } else {
            Err(Error::NotDominant(lambda.to_vec()))
        }
    }

    /// `c₊^σ(−γ_μ)`.
    fn c_plus_sigma_at(&self, mu: &[i64]) -> Result<Rational> {
        c_plus(&neg(&self.gamma_point(mu)), &self.params().sigma())
            .map_err(|e| Error::Degenerate(format!("c₊^σ(−γ_{mu:?}): {e}")))
    }

    /// `Σ_{μ ∈ W₀λ} c₊^σ(−γ_μ)` and `c₊^σ(−γ₀)`, equal by the constant-sum lemma.
    pub fn k_sum(&self, lambda: &[i64]) -> Result<(Rational, Rational)> {
        let mut sum = Rational::zero();
        for mu in finite_orbit(lambda) {
            sum += self.c_plus_sigma_at(&mu)?;
        }
        Ok((sum, self.c_plus_sigma_at(&vec![0; self.n()])?))
    }

    /// `E⁺` as the combination `Σ_{μ∈W₀λ} c₊^σ(−γ_μ)E_μ / c₊^σ(−γ₀)`.
    pub fn e_plus_route_a(&self, lambda: &[i64]) -> Result<SparsePoly> {
        Self::require_dominant(lambda)?;
        let mut acc = SparsePoly::zero(self.n());
        for mu in finite_orbit(lambda) {
            acc = acc + self.e(&mu)?.scale(&self.c_plus_sigma_at(&mu)?);
        }
        let norm = self.c_plus_sigma_at(&vec![0; self.n()])?;
        Ok(acc.scale(&norm.recip()))
    }

    /// `E⁺ = |W₀| C⁺E_μ / c₊(−x₀)` for a chosen `μ ∈ W₀λ`.
    pub fn e_plus_route_b(&self, lambda: &[i64], mu: &[i64]) -> Result<SparsePoly> {
        Self::require_dominant(lambda)?;
        if !finite_orbit(lambda).iter().any(|w| w == mu) {
            return Err(Error::Precondition(format!("{mu:?} is not in the orbit of {lambda:?}")));
        }
        let n = self.n();
        let group_order: i64 = (1..=n as i64).product::<i64>() << n;
        let img = symmetrize_cplus(&self.e(mu)?, self.params())?;
        let k = c_plus(&neg(self.x0()), self.params()).map_err(|e| Error::Degenerate(format!("c₊(−x₀): {e}")))?;
        if k.is_zero() {
            return Err(Error::Degenerate("c₊(−x₀) = 0".into()));
        }
        Ok(img.scale(&(int(group_order) / k)))
    }

    /// `E⁺(·,γ_λ)`, built by route A and cross-checked against route B from
    /// every orbit point. A disagreement is an internal consistency failure.
    pub fn symmetric_e_plus(&self, lambda: &[i64]) -> Result<SparsePoly> {
        let a = self.e_plus_route_a(lambda)?;
        for mu in finite_orbit(lambda) {
            if self.e_plus_route_b(lambda, &mu)? != a {
                return Err(Error::Consistency(format!(
                    "symmetric routes disagree for λ = {lambda:?} via μ = {mu:?}"
                )));
            }
        }
        if !is_w0_invariant(&a) || a.eval(self.x0()) != int(1) {
            return Err(Error::Consistency(format!(
                "E⁺ for {lambda:?} is not normalized and invariant"
            )));
        }
        Ok(a)
    }

    /// `L E⁺ = (Σ λ_i(λ_i+a+b+c+d−1+2(n−i)t)) E⁺`.
    pub fn verify_l_eigen(&self, lambda: &[i64]) -> Result<bool> {
        let e = self.symmetric_e_plus(lambda)?;
        let le = apply_l_sym(&e, self.params())?;
        Ok(le == e.scale(&l_eigenvalue(lambda, self.params())))
    }

    /// `E⁺(x_μ,γ_λ;𝐭) = E⁺(γ_λ,x_μ;𝐭^σ)` for dominant λ, μ.
    pub fn symmetric_duality_check(&self, dual: &WilsonEngine, lambda: &[i64], mu: &[i64]) -> Result<bool> {
        if dual.params() != &self.params().sigma() {
            return Err(Error::Precondition("dual engine must use the σ-parameters".into()));
        }
        let lhs = self.symmetric_e_plus(lambda)?.eval(&self.x_point(mu));
        let rhs = dual.symmetric_e_plus(mu)?.eval(&self.gamma_point(lambda));
        Ok(lhs == rhs)
    }

    /// `⟨1,1⟩/⟨E⁺,E⁺⟩` from the nonsymmetric expansion. For invariant
    /// polynomials both forms differ by the same constant, so this is also
    /// `⟨1,1⟩₊/⟨E⁺,E⁺⟩₊`, the quantity [`WilsonEngine::relative_norm_plus`] predicts.
    pub fn symmetric_norm_from_expansion(&self, lambda: &[i64]) -> Result<Rational> {
        let e = self.symmetric_e_plus(lambda)?;
        let ip = self.alg_inner(&e, &e, &super::Mass::Unit)?;
        if ip.is_zero() {
            return Err(Error::Degenerate(format!("⟨E⁺,E⁺⟩ = 0 for {lambda:?}")));
        }
        Ok(ip.recip())
    }
}
