//! Nonsymmetric and symmetric multivariable Wilson polynomials built from the
//! intertwiners of the polynomial representation.

mod expand;
mod norms;
mod spectral;
mod symmetric;

pub use expand::{FiniteSpectralFunction, Mass};
pub use norms::{NormReport, NormStep};

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::{format_rational, Rational, SparsePoly, TermJson};
use crate::operators::{coeffs, Params, Representation};
use crate::weyl::{dot_apply, dot_letter_int, inversion_set, u_lambda_word, weights_up_to, Weight};

/// Joint `Y`-spectrum point `γ_λ`, or its dual `x_λ`.
pub type SpectralPoint = Vec<Rational>;

/// One nonsymmetric Wilson polynomial with its spectral data.
#[derive(Clone, Debug)]
pub struct WilsonRecord {
    pub lambda: Weight,
    /// `p_λ` as produced by the intertwiners.
    pub p: SparsePoly,
    pub gamma: SpectralPoint,
    /// `p_λ(−x₀)`.
    pub eval_at_minus_x0: Rational,
    /// `E(·, γ_λ) = p_λ / p_λ(−x₀)`.
    pub e: SparsePoly,
    /// `ν_λ`, the norm ratio `⟨1,1⟩/⟨E_λ,E_λ⟩`.
    pub rel_norm: Rational,
}

#[derive(Serialize)]
pub struct WilsonRecordJson {
    pub lambda: Weight,
    pub gamma: Vec<String>,
    pub eval: String,
    pub rel_norm: String,
    pub poly: Vec<TermJson>,
    #[serde(rename = "E")]
    pub e: Vec<TermJson>,
}

impl WilsonRecord {
    pub fn to_json(&self) -> WilsonRecordJson {
        WilsonRecordJson {
            lambda: self.lambda.clone(),
            gamma: self.gamma.iter().map(format_rational).collect(),
            eval: format_rational(&self.eval_at_minus_x0),
            rel_norm: format_rational(&self.rel_norm),
            poly: self.p.to_json_terms(),
            e: self.e.to_json_terms(),
        }
    }
}

pub(crate) fn neg(x: &[Rational]) -> Vec<Rational> {
    x.iter().map(|v| -v.clone()).collect()
}

/// Memoizing constructor for the Wilson polynomials at fixed `(n, 𝐭)`.
pub struct WilsonEngine {
    rep: Representation,
    memo: Mutex<HashMap<Weight, Arc<WilsonRecord>>>,
    x0: Vec<Rational>,
}

impl WilsonEngine {
    pub fn new(n: usize, params: Params) -> Self {
        let x0 = params.sigma().gamma0(n);
        WilsonEngine {
            rep: Representation::new(n, params),
            memo: Mutex::new(HashMap::new()),
            x0,
        }
    }

    pub fn n(&self) -> usize {
        self.rep.n()
    }

    pub fn params(&self) -> &Params {
        self.rep.params()
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    /// `x₀ = γ₀(𝐭^σ)`.
    pub fn x0(&self) -> &[Rational] {
        &self.x0
    }

    /// The engine for the dual parameters `𝐭^σ`.
    pub fn dual(&self) -> WilsonEngine {
        WilsonEngine::new(self.n(), self.params().sigma())
    }

    pub fn gamma_point(&self, lambda: &[i64]) -> SpectralPoint {
        gamma_point(lambda, self.params())
    }

    pub fn x_point(&self, lambda: &[i64]) -> SpectralPoint {
        gamma_point(lambda, &self.params().sigma())
    }

    /// The record for λ, built on first use.
    pub fn record(&self, lambda: &[i64]) -> Result<Arc<WilsonRecord>> {
        if lambda.len() != self.n() {
            return Err(Error::Dimension {
                expected: self.n(),
                got: lambda.len(),
            });
        }
        if let Some(r) = self.memo.lock().unwrap().get(lambda) {
            return Ok(r.clone());
        }
        let rec = Arc::new(self.build(lambda)?);
        // a concurrent builder produces the identical record, so either copy may win
        let mut memo = self.memo.lock().unwrap();
        Ok(memo.entry(lambda.to_vec()).or_insert(rec).clone())
    }

    fn build(&self, lambda: &[i64]) -> Result<WilsonRecord> {
        let n = self.n();
        let gamma = self.gamma_point(lambda);
        let p = if lambda.iter().all(|&m| m == 0) {
            SparsePoly::one(n)
        } else {
            // u_λ = s_{w₀} u_μ with μ = s_{w₀}·λ one step closer to 0
            let i = u_lambda_word(lambda)[0];
            let mu = dot_letter_int(i, lambda);
            let prev = self.record(&mu)?;
            if prev.gamma == gamma {
                return Err(Error::Degenerate(format!(
                    "γ_{lambda:?} = γ_{mu:?}; change the parameters"
                )));
            }
            self.rep.apply_s(i, &prev.p, Some(&prev.gamma))
        };
        let eval = p.eval(&neg(&self.x0));
        if eval.is_zero() {
            return Err(Error::Degenerate(format!(
                "p_{lambda:?}(−x₀) = 0; change the parameters"
            )));
        }
        let e = p.scale(&eval.recip());
        let rel_norm = self.relative_norm(lambda)?;
        Ok(WilsonRecord {
            lambda: lambda.to_vec(),
            p,
            gamma,
            eval_at_minus_x0: eval,
            e,
            rel_norm,
        })
    }

    /// `E(·, γ_λ)`.
    pub fn e(&self, lambda: &[i64]) -> Result<SparsePoly> {
        Ok(self.record(lambda)?.e.clone())
    }

    /// `p_λ(−x₀) = ∏ K_α(−γ₀)` over the roots inverted by `u_λ⁻¹`.
    pub fn evaluation_value(&self, lambda: &[i64]) -> Result<Rational> {
        let n = self.n();
        let mut word = u_lambda_word(lambda);
        word.reverse();
        let mg0 = neg(&self.params().gamma0(n));
        let mut acc = Rational::one();
        for a in inversion_set(&word, n)? {
            acc *= coeffs::k_alpha(&a, &mg0, self.params())
                .map_err(|e| Error::Degenerate(format!("evaluation factor for {a}: {e}")))?;
        }
        Ok(acc)
    }

    /// Pairwise distinctness of `γ_λ` over `Σ|λ_i| ≤ radius`.
    pub fn check_genericity(&self, radius: i64) -> Result<()> {
        let mut seen: HashMap<SpectralPoint, Weight> = HashMap::new();
        for l in weights_up_to(self.n(), radius) {
            let g = self.gamma_point(&l);
            if let Some(prev) = seen.insert(g, l.clone()) {
                return Err(Error::Degenerate(format!(
                    "γ_{prev:?} = γ_{l:?}; change the parameters"
                )));
            }
        }
        Ok(())
    }

    /// Whether every weight up to `radius` has a record (genericity of the whole range).
    pub fn build_range(&self, radius: i64) -> Result<Vec<Arc<WilsonRecord>>> {
        self.check_genericity(radius)?;
        weights_up_to(self.n(), radius).iter().map(|l| self.record(l)).collect()
    }
}

/// `γ_λ = u_λ·γ₀`.
pub fn gamma_point(lambda: &[i64], params: &Params) -> SpectralPoint {
    dot_apply(&u_lambda_word(lambda), &params.gamma0(lambda.len()))
}

/// Filtration level of λ: the total degree of `x^{φ(λ)}`.
pub fn degree_of(lambda: &[i64]) -> usize {
    crate::weyl::phi(lambda).iter().map(|&e| e as usize).sum()
}

/// All weights whose monomial has total degree `≤ d`.
pub fn weights_of_degree_up_to(n: usize, d: usize) -> Vec<Weight> {
    weights_up_to(n, d as i64)
        .into_iter()
        .filter(|l| degree_of(l) <= d)
        .collect()
}
