//! Actions of `T_i`, `Uₙ` and `S_i` on the Wilson polynomials expressed through
//! the spectral parameter, and the duality between `𝐭` and `𝐭^σ`.

use super::{neg, WilsonEngine};
use crate::error::{Error, Result};
use crate::exactpoly::int;
use crate::operators::coeffs::{a_i, c_i, d_i, q_i};
use crate::weyl::{dot_letter_int, raises};

impl WilsonEngine {
    /// `T̃_i E_λ = c_i^σ(−γ_λ)E_{s_i·λ} − d_i^σ(−γ_λ)E_λ` with `T̃₀ = Uₙ`, or
    /// `T_iE_λ = χ_iE_λ` when `s_i` fixes λ.
    pub fn verify_spectral_action(&self, lambda: &[i64], i: usize) -> Result<bool> {
        let n = self.n();
        let r = self.record(lambda)?;
        let lhs = self.rep().apply_t_tilde(i, &r.e);
        let mu = dot_letter_int(i, lambda);
        if mu == lambda {
            return Ok(lhs == r.e.scale(&self.params().chi(i, n)));
        }
        let s = self.params().sigma();
        let mg = neg(&r.gamma);
        let c = c_i(i, &mg, &s)?;
        let d = d_i(i, &mg, &s)?;
        let rhs = &self.e(&mu)?.scale(&c) - &r.e.scale(&d);
        Ok(lhs == rhs)
    }

    /// The scalar `b` with `S_iE_λ = b E_{s_i·λ}`: `b = 2(−a_i)(−γ_λ) c_i^σ(−γ_λ)`,
    /// which for `i ≥ 1` is `2a_i(γ_λ)c_i^σ(−γ_λ)`.
    pub fn intertwiner_scalar(&self, lambda: &[i64], i: usize) -> Result<crate::Rational> {
        let r = self.record(lambda)?;
        let mg = neg(&r.gamma);
        Ok(int(-2) * a_i(i, &mg) * c_i(i, &mg, &self.params().sigma())?)
    }

    /// `S_iE_λ = b E_{s_i·λ}` with the closed-form scalar.
    pub fn verify_intertwiner_on_e(&self, lambda: &[i64], i: usize) -> Result<bool> {
        let mu = dot_letter_int(i, lambda);
        if mu == lambda {
            return Err(Error::Precondition(format!("s_{i} fixes {lambda:?}")));
        }
        let r = self.record(lambda)?;
        let lhs = self.rep().apply_s(i, &r.e, Some(&r.gamma));
        Ok(lhs == self.e(&mu)?.scale(&self.intertwiner_scalar(lambda, i)?))
    }

    /// `S_ip_λ` is `p_{s_i·λ}` when `s_i` raises λ, `q_i(γ_{s_i·λ})p_{s_i·λ}` when
    /// it lowers, and 0 when it fixes λ.
    pub fn verify_intertwiner_trichotomy(&self, lambda: &[i64], i: usize) -> Result<bool> {
        let r = self.record(lambda)?;
        let lhs = self.rep().apply_s(i, &r.p, Some(&r.gamma));
        let mu = dot_letter_int(i, lambda);
        Ok(match raises(i, lambda) {
            None => lhs.is_zero(),
            Some(true) => lhs == self.record(&mu)?.p,
            Some(false) => {
                let rm = self.record(&mu)?;
                lhs == rm.p.scale(&q_i(i, &rm.gamma, self.params()))
            }
        })
    }

    /// `T_ip_λ = d_i^σ(γ_λ)p_λ + B p_{s_i·λ}` for `i ∈ [1,n]`, with
    /// `B = 1/(2a_i(γ_λ))` when `s_i` raises λ and `q_i(γ_{s_i·λ})/(2a_i(γ_λ))`
    /// when it lowers; `T_ip_λ = χ_ip_λ` when `s_i` fixes λ.
    pub fn verify_t_coefficients(&self, lambda: &[i64], i: usize) -> Result<bool> {
        let n = self.n();
        if i == 0 || i > n {
            return Err(Error::Precondition(format!("letter {i} outside [1,{n}]")));
        }
        let r = self.record(lambda)?;
        let lhs = self.rep().apply_t(i, &r.p);
        let mu = dot_letter_int(i, lambda);
        let Some(up) = raises(i, lambda) else {
            return Ok(lhs == r.p.scale(&self.params().chi(i, n)));
        };
        let rm = self.record(&mu)?;
        let g = if up { int(1) } else { q_i(i, &rm.gamma, self.params()) };
        let b = g / (int(2) * a_i(i, &r.gamma));
        let a = d_i(i, &r.gamma, &self.params().sigma())?;
        Ok(lhs == &r.p.scale(&a) + &rm.p.scale(&b))
    }

    /// `E(−x_μ, γ_λ; 𝐭) = E(−γ_λ, x_μ; 𝐭^σ)`, with `dual` built for `𝐭^σ`.
    pub fn duality_check(&self, dual: &WilsonEngine, lambda: &[i64], mu: &[i64]) -> Result<bool> {
        if dual.params() != &self.params().sigma() {
            return Err(Error::Precondition("dual engine must use the σ-parameters".into()));
        }
        let lhs = self.e(lambda)?.eval(&neg(&self.x_point(mu)));
        let rhs = dual.e(mu)?.eval(&neg(&self.gamma_point(lambda)));
        Ok(lhs == rhs)
    }
}
