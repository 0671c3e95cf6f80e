//! The exact verification suites, each producing a deterministic JSON report.
//!
//! A suite returns `Err` only for configuration problems (degenerate or
//! non-generic parameters, bad ranges). Every mathematical identity it checks
//! ends up as a [`SuiteCheck`], failing or not.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::{format_rational, int, q, SparsePoly};
use crate::operators::{
    check_t_triangularity, gdaha_relations, monomials_up_to, relation_suite, run_relations, Params, Relation,
    Representation,
};
use crate::weyl::{dot_letter_int, is_dominant, phi, weights_up_to, Weight};
use crate::wilson::{FiniteSpectralFunction, Mass, WilsonEngine};

/// Names accepted by [`run_exact_suite`].
pub const EXACT_SUITES: [&str; 8] = [
    "relations",
    "gdaha",
    "eigen",
    "duality",
    "evaluation",
    "norms",
    "fourier",
    "symmetric",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteCheck {
    pub name: String,
    pub holds: bool,
    /// First monomial exponent on which an operator identity fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monomial: Option<Vec<u16>>,
    /// The weight the failing check is about (through φ for monomials).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<Weight>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl SuiteCheck {
    fn new(name: impl Into<String>, holds: bool) -> Self {
        SuiteCheck {
            name: name.into(),
            holds,
            monomial: None,
            weight: None,
            detail: None,
        }
    }

    /// Attaches λ as the counterexample when the check fails.
    fn at(mut self, lambda: &[i64]) -> Self {
        if !self.holds {
            self.weight = Some(lambda.to_vec());
        }
        self
    }

    fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExactReport {
    pub suite: String,
    pub n: usize,
    /// `(t₀, u₀, t, tₙ, uₙ)` as exact strings.
    pub params: [String; 5],
    /// Monomial degree bound for operator identities, or the filtration level.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    /// Range `Σ|λ_i| ≤ lambda_sum` for checks on Wilson polynomials.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_sum: Option<i64>,
    pub checks: Vec<SuiteCheck>,
    pub failures: usize,
    pub passed: bool,
}

/// Inputs shared by the exact suites.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n: usize,
    pub params: Params,
    /// Degree bound for `relations` and `gdaha`, filtration level for `fourier`.
    pub degree: Option<usize>,
    /// Weight range for the Wilson suites.
    pub lambda_sum: Option<i64>,
}

impl SuiteConfig {
    pub fn new(n: usize, params: Params) -> Self {
        SuiteConfig {
            n,
            params,
            degree: None,
            lambda_sum: None,
        }
    }

    pub fn degree(mut self, d: usize) -> Self {
        self.degree = Some(d);
        self
    }

    pub fn lambda_sum(mut self, r: i64) -> Self {
        self.lambda_sum = Some(r);
        self
    }
}

fn params_strings(p: &Params) -> [String; 5] {
    [&p.t0, &p.u0, &p.t, &p.tn, &p.un].map(format_rational)
}

fn finish(
    suite: &str,
    cfg: &SuiteConfig,
    degree: Option<usize>,
    lambda_sum: Option<i64>,
    checks: Vec<SuiteCheck>,
) -> ExactReport {
    let failures = checks.iter().filter(|c| !c.holds).count();
    ExactReport {
        suite: suite.into(),
        n: cfg.n,
        params: params_strings(&cfg.params),
        degree,
        lambda_sum,
        checks,
        failures,
        passed: failures == 0,
    }
}

fn engine(cfg: &SuiteConfig, radius: i64) -> Result<WilsonEngine> {
    if cfg.n < 2 {
        return Err(Error::Config(format!("n must be at least 2, got {}", cfg.n)));
    }
    if radius < 0 {
        return Err(Error::Config(format!("lambda-sum must be nonnegative, got {radius}")));
    }
    let eng = WilsonEngine::new(cfg.n, cfg.params.clone());
    eng.build_range(radius)?;
    Ok(eng)
}

/// Runs an exact suite by name.
pub fn run_exact_suite(name: &str, cfg: &SuiteConfig) -> Result<ExactReport> {
    match name {
        "relations" => relations(cfg),
        "gdaha" => gdaha(cfg),
        "eigen" => eigen(cfg),
        "duality" => duality(cfg),
        "evaluation" => evaluation(cfg),
        "norms" => norms(cfg),
        "fourier" => fourier(cfg),
        "symmetric" => symmetric(cfg),
        other => Err(Error::Config(format!(
            "unknown suite {other:?}; expected one of {}",
            EXACT_SUITES.join(", ")
        ))),
    }
}

fn operator_suite(name: &str, cfg: &SuiteConfig, default_degree: usize, rels: Vec<Relation>) -> Result<ExactReport> {
    if cfg.n < 2 {
        return Err(Error::Config(format!("n must be at least 2, got {}", cfg.n)));
    }
    let d = cfg.degree.unwrap_or(default_degree);
    let rep = Representation::new(cfg.n, cfg.params.clone());
    let checks = run_relations(&rep, &rels, d)
        .into_iter()
        .map(|r| SuiteCheck {
            name: r.name,
            holds: r.check.holds,
            monomial: r.check.counterexample,
            weight: r.check.counterexample_weight,
            detail: None,
        })
        .collect();
    Ok(finish(name, cfg, Some(d), None, checks))
}

/// Every defining relation of the algebra as an exact operator identity on
/// monomials of degree `≤ D` (default 6 for n = 2, 4 otherwise).
pub fn relations(cfg: &SuiteConfig) -> Result<ExactReport> {
    let default = if cfg.n == 2 { 6 } else { 4 };
    operator_suite("relations", cfg, default, relation_suite(cfg.n, &cfg.params))
}

/// The GDAHA presentation, same conventions as [`relations`].
pub fn gdaha(cfg: &SuiteConfig) -> Result<ExactReport> {
    let default = if cfg.n == 2 { 6 } else { 4 };
    operator_suite("gdaha", cfg, default, gdaha_relations(cfg.n, &cfg.params))
}

/// Eigenvalue equations, basis property and leading coefficients of `p_λ`,
/// the spectral action of `T_i`/`Uₙ`, the intertwiner trichotomy, the `T_i`
/// coefficients and the triangularity of `T_i` on monomials.
pub fn eigen(cfg: &SuiteConfig) -> Result<ExactReport> {
    let r = cfg.lambda_sum.unwrap_or(3);
    let eng = engine(cfg, r)?;
    let n = cfg.n;
    let mut checks = Vec::new();
    for l in weights_up_to(n, r) {
        let rec = eng.record(&l)?;
        for i in 1..=n {
            let lhs = eng.rep().apply_y(i, &rec.p);
            let ok = lhs == rec.p.scale(&rec.gamma[i - 1]);
            checks.push(SuiteCheck::new(format!("Y{i} p{l:?} = gamma_{i} p{l:?}"), ok).at(&l));
        }
        let lead = rec.p.coeff(&phi(&l));
        checks.push(
            SuiteCheck::new(format!("leading coefficient of p{l:?}"), !lead.is_zero())
                .at(&l)
                .detail(format_rational(&lead)),
        );
        for i in 0..=n {
            let ok = eng.verify_spectral_action(&l, i)?;
            checks.push(SuiteCheck::new(format!("spectral action of T~{i} on E{l:?}"), ok).at(&l));
            let ok = eng.verify_intertwiner_trichotomy(&l, i)?;
            checks.push(SuiteCheck::new(format!("S{i} p{l:?} trichotomy"), ok).at(&l));
            if dot_letter_int(i, &l) != l {
                let ok = eng.verify_intertwiner_on_e(&l, i)?;
                checks.push(SuiteCheck::new(format!("S{i} E{l:?} scalar"), ok).at(&l));
            }
            if i >= 1 {
                let ok = eng.verify_t_coefficients(&l, i)?;
                checks.push(SuiteCheck::new(format!("T{i} p{l:?} coefficients"), ok).at(&l));
            }
        }
    }
    for d in 0..=r as usize {
        let ok = eng.basis_is_complete(d)?;
        checks.push(SuiteCheck::new(format!("E basis of filtration level {d}"), ok));
    }
    let failures = check_t_triangularity(eng.rep(), r);
    let mut tri = SuiteCheck::new("T_i triangular on monomials", failures.is_empty());
    if let Some(f) = failures.first() {
        tri.weight = Some(f.lambda.clone());
        tri.detail = Some(format!("letter {}: residual {}", f.letter, f.residual));
    }
    checks.push(tri);
    Ok(finish("eigen", cfg, None, Some(r), checks))
}

/// `E(−x_μ,γ_λ;𝐭) = E(−γ_λ,x_μ;𝐭^σ)` for all pairs in range, and the
/// symmetric duality for dominant pairs with entries at most 1.
pub fn duality(cfg: &SuiteConfig) -> Result<ExactReport> {
    let r = cfg.lambda_sum.unwrap_or(2);
    let eng = engine(cfg, r)?;
    let dual = eng.dual();
    dual.build_range(r)?;
    let ws = weights_up_to(cfg.n, r);
    let mut checks = Vec::new();
    for l in &ws {
        for m in &ws {
            let ok = eng.duality_check(&dual, l, m)?;
            checks.push(SuiteCheck::new(format!("duality lambda={l:?} mu={m:?}"), ok).at(l));
        }
    }
    let dom: Vec<Weight> = ws
        .iter()
        .filter(|l| is_dominant(l) && l.iter().all(|&v| v <= 1))
        .cloned()
        .collect();
    for l in &dom {
        for m in &dom {
            let ok = eng.symmetric_duality_check(&dual, l, m)?;
            checks.push(SuiteCheck::new(format!("symmetric duality lambda={l:?} mu={m:?}"), ok).at(l));
        }
    }
    Ok(finish("duality", cfg, None, Some(r), checks))
}

/// The product formula for `p_λ(−x₀)` against direct evaluation.
pub fn evaluation(cfg: &SuiteConfig) -> Result<ExactReport> {
    let r = cfg.lambda_sum.unwrap_or(3);
    let eng = engine(cfg, r)?;
    let mut checks = Vec::new();
    for l in weights_up_to(cfg.n, r) {
        let direct = eng.record(&l)?.eval_at_minus_x0.clone();
        let product = eng.evaluation_value(&l)?;
        checks.push(
            SuiteCheck::new(format!("p{l:?}(-x0) product formula"), direct == product)
                .at(&l)
                .detail(format!(
                    "direct {} product {}",
                    format_rational(&direct),
                    format_rational(&product)
                )),
        );
    }
    Ok(finish("evaluation", cfg, None, Some(r), checks))
}

/// Stepwise norm ratios against the product formula, with path independence.
pub fn norms(cfg: &SuiteConfig) -> Result<ExactReport> {
    let r = cfg.lambda_sum.unwrap_or(3);
    let eng = engine(cfg, r)?;
    let rep = eng.norm_consistency(r)?;
    let mut checks: Vec<SuiteCheck> = rep
        .steps
        .iter()
        .map(|s| {
            SuiteCheck::new(format!("norm ratio {:?} via s{}", s.lambda, s.letter), s.holds)
                .at(&s.lambda)
                .detail(format!(
                    "intertwiner {} lemma {} product {}",
                    s.from_intertwiner, s.from_lemma, s.from_product
                ))
        })
        .collect();
    checks.push(SuiteCheck::new(
        "norm telescoping is path independent",
        rep.path_independent,
    ));
    Ok(finish("norms", cfg, None, Some(r), checks))
}

/// `G∘F = id` on every monomial of degree `≤ D` and on a mixed polynomial,
/// `F∘G = id` on the deltas, and Plancherel at `c = 1` on monomial pairs.
pub fn fourier(cfg: &SuiteConfig) -> Result<ExactReport> {
    let d = cfg.degree.unwrap_or(3);
    let eng = engine(cfg, d as i64)?;
    let n = cfg.n;
    let unit = Mass::Unit;
    let monos: Vec<SparsePoly> = monomials_up_to(n, d)
        .into_iter()
        .map(|e| SparsePoly::monomial(n, e, int(1)))
        .collect();
    let mut tests = monos.clone();
    let x = |i| SparsePoly::var(n, i);
    tests.push(&(&x(0) * &x(1)) + &SparsePoly::constant(n, int(3)));
    if d >= 2 {
        tests.push(&(&x(0).pow(2).scale(&q(2, 3)) - &x(1)) + &SparsePoly::constant(n, q(-1, 7)));
    }
    let mut checks = Vec::new();
    let mut transforms = Vec::new();
    for f in &tests {
        let ff = eng.fourier_f(f, &unit)?;
        let back = eng.fourier_g(&ff, &unit)?;
        checks.push(SuiteCheck::new(format!("G(F(f)) = f for f = {f}"), back == *f));
        transforms.push(ff);
    }
    for l in crate::wilson::weights_of_degree_up_to(n, d) {
        let delta = FiniteSpectralFunction::delta(&l);
        let g = eng.fourier_g(&delta, &unit)?;
        let ok = eng.fourier_f(&g, &unit)? == delta;
        checks.push(SuiteCheck::new(format!("F(G(delta{l:?})) = delta{l:?}"), ok).at(&l));
    }
    for i in 0..monos.len() {
        for j in i..monos.len() {
            let lhs = eng.spectral_pairing(&transforms[i], &transforms[j], &unit)?;
            let rhs = eng.alg_inner(&monos[i], &monos[j], &unit)?;
            checks.push(SuiteCheck::new(
                format!("Plancherel <{}, {}>", monos[i], monos[j]),
                lhs == rhs,
            ));
        }
    }
    Ok(finish("fourier", cfg, Some(d), None, checks))
}

/// For nonzero dominant λ with `Σλ_i ≤ r` (default 2): the two constructions
/// of `E⁺` agree, the constant-sum lemma, the eigenvalue equation of the
/// Wilson operator `L`, and the symmetric norm against the expansion.
pub fn symmetric(cfg: &SuiteConfig) -> Result<ExactReport> {
    let r = cfg.lambda_sum.unwrap_or(2);
    let eng = engine(cfg, r)?;
    let mut checks = Vec::new();
    let dominant: Vec<Weight> = weights_up_to(cfg.n, r)
        .into_iter()
        .filter(|l| is_dominant(l) && l.iter().any(|&v| v != 0))
        .collect();
    for l in &dominant {
        let a = eng.e_plus_route_a(l)?;
        let mut routes = true;
        let mut bad = None;
        for mu in crate::weyl::finite_orbit(l) {
            if eng.e_plus_route_b(l, &mu)? != a {
                routes = false;
                bad.get_or_insert(mu);
            }
        }
        let mut ch = SuiteCheck::new(format!("E+{l:?} routes agree"), routes).at(l);
        if let Some(mu) = bad {
            ch.detail = Some(format!("route B from {mu:?} differs"));
        }
        checks.push(ch);
        let normalized = crate::operators::is_w0_invariant(&a) && a.eval(eng.x0()) == int(1);
        checks.push(SuiteCheck::new(format!("E+{l:?} invariant with value 1 at x0"), normalized).at(l));
        let (sum, c0) = eng.k_sum(l)?;
        checks.push(
            SuiteCheck::new(format!("K-sum over the orbit of {l:?}"), sum == c0)
                .at(l)
                .detail(format!(
                    "sum {} constant {}",
                    format_rational(&sum),
                    format_rational(&c0)
                )),
        );
        if routes && normalized {
            checks.push(SuiteCheck::new(format!("L E+{l:?} eigenvalue"), eng.verify_l_eigen(l)?).at(l));
            let predicted = eng.relative_norm_plus(l)?;
            let expanded = eng.symmetric_norm_from_expansion(l)?;
            checks.push(
                SuiteCheck::new(format!("symmetric norm of {l:?}"), predicted == expanded)
                    .at(l)
                    .detail(format!(
                        "formula {} expansion {}",
                        format_rational(&predicted),
                        format_rational(&expanded)
                    )),
            );
        }
    }
    Ok(finish("symmetric", cfg, None, Some(r), checks))
}
