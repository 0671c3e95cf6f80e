//! Numeric cross-checks of the exact layer, serialized as JSON reports.

use serde::Serialize;

use super::gamma::ln_gamma_real;
use super::quadrature::{QuadResult, Quadrature, QuadratureSpec};
use super::weight::WeightKind;
use crate::error::{Error, Result};
use crate::exactpoly::{format_rational, int, q, to_f64, SparsePoly};
use crate::operators::coeffs::c_plus;
use crate::operators::{Op, Params, Representation};
use crate::weyl::{weights_up_to, Weight};
use crate::wilson::WilsonEngine;

/// `⟨1,1⟩₊ = 2ⁿn! ∏_j Γ(tj) ∏_{k<l} Γ(v_k+v_l+(j−1)t) / (Γ(t) Γ(Σv+(n+j−2)t))`
/// with `v = (a,b,c,d)`.
pub fn gustafson_constant(params: &Params, n: usize) -> Result<f64> {
    params.check_positive()?;
    let v = params.wilson_abcd().map(|x| to_f64(&x));
    let t = to_f64(&params.t);
    let total: f64 = v.iter().sum();
    let lg = |x: f64| ln_gamma_real(x).map_err(|e| Error::Degenerate(format!("constant term: {e}")));
    let mut ln = (n as f64) * 2f64.ln() + (1..=n).map(|k| (k as f64).ln()).sum::<f64>();
    for j in 1..=n {
        let jf = j as f64;
        ln += lg(t * jf)? - lg(t)?;
        for k in 0..4 {
            for l in k + 1..4 {
                ln += lg(v[k] + v[l] + (jf - 1.0) * t)?;
            }
        }
        ln -= lg(total + (n as f64 + jf - 2.0) * t)?;
    }
    Ok(ln.exp())
}

/// `|W₀|`.
fn group_order(n: usize) -> f64 {
    (1..=n).product::<usize>() as f64 * 2f64.powi(n as i32)
}

/// `⟨1,1⟩ = (c₊(−x₀)/|W₀|)⟨1,1⟩₊` with the closed-form constant term.
pub fn full_mass(params: &Params, n: usize) -> Result<f64> {
    let mx0: Vec<_> = params.sigma().gamma0(n).iter().map(|v| -v.clone()).collect();
    let k = c_plus(&mx0, params)?;
    Ok(to_f64(&k) / group_order(n) * gustafson_constant(params, n)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct NumericCheck {
    pub name: String,
    pub value: f64,
    pub expected: f64,
    /// Relative deviation, or the residual ratio for orthogonality and symmetry checks.
    pub error: f64,
    pub tolerance: f64,
    pub imag_residual: f64,
    pub error_estimate: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct NumericReport {
    pub suite: String,
    pub params: [String; 5],
    pub spec: QuadratureSpec,
    pub checks: Vec<NumericCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gram: Option<GramMatrix>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GramMatrix {
    pub labels: Vec<Weight>,
    pub entries: Vec<Vec<f64>>,
}

fn imag_ok(r: &QuadResult) -> bool {
    r.im.abs() <= 1e-8 * (r.re.abs() + 1.0)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

/// Passes when the deviation is within `tolerance` and the quadrature's own
/// doubling estimate, measured against `scale`, is too.
fn check(
    name: impl Into<String>,
    r: &QuadResult,
    expected: f64,
    error: f64,
    tolerance: f64,
    scale: f64,
) -> NumericCheck {
    NumericCheck {
        name: name.into(),
        value: r.re,
        expected,
        error,
        tolerance,
        imag_residual: r.im.abs(),
        error_estimate: r.error_estimate,
        passed: error <= tolerance && imag_ok(r) && r.error_estimate <= tolerance * scale.abs(),
    }
}

fn params_strings(p: &Params) -> [String; 5] {
    [&p.t0, &p.u0, &p.t, &p.tn, &p.un].map(format_rational)
}

fn report(
    suite: &str,
    p: &Params,
    spec: &QuadratureSpec,
    checks: Vec<NumericCheck>,
    gram: Option<GramMatrix>,
) -> NumericReport {
    let passed = checks.iter().all(|c| c.passed);
    NumericReport {
        suite: suite.into(),
        params: params_strings(p),
        spec: spec.clone(),
        checks,
        gram,
        passed,
    }
}

const N: usize = 2;
/// Relative doubling estimate above which a raw result carries a warning.
const QUAD_TOL: f64 = 1e-4;

/// `⟨1,1⟩₊` and `⟨1,1⟩` by quadrature against the closed forms.
pub fn constant_suite(params: &Params, spec: &QuadratureSpec, tolerance: Option<f64>) -> Result<NumericReport> {
    let tol = |default: f64| tolerance.unwrap_or(default);
    let one = SparsePoly::one(N);
    let plus = Quadrature::new(spec, WeightKind::Plus, params, QUAD_TOL)?;
    let full = Quadrature::new(spec, WeightKind::Full, params, QUAD_TOL)?;
    let g = gustafson_constant(params, N)?;
    let m = full_mass(params, N)?;
    let rp = plus.inner(&one, &one)?;
    let rf = full.inner(&one, &one)?;
    let checks = vec![
        check("<1,1>_plus vs constant term", &rp, g, rel(rp.re, g), tol(1e-4), g),
        check("<1,1> vs c+(-x0)/|W0| <1,1>_plus", &rf, m, rel(rf.re, m), tol(1e-4), m),
    ];
    Ok(report("constant", params, spec, checks, None))
}

/// Gram matrix of `{E_λ : Σ|λ_i| ≤ 2}` under `⟨·,·⟩`: diagonal against
/// `⟨1,1⟩/ν_λ`, off-diagonal against zero.
pub fn orthogonality_suite(params: &Params, spec: &QuadratureSpec, tolerance: Option<f64>) -> Result<NumericReport> {
    let tol = |default: f64| tolerance.unwrap_or(default);
    let eng = WilsonEngine::new(N, params.clone());
    let quad = Quadrature::new(spec, WeightKind::Full, params, QUAD_TOL)?;
    let labels = weights_up_to(N, 2);
    let es = labels.iter().map(|l| eng.record(l)).collect::<Result<Vec<_>>>()?;
    let mass = full_mass(params, N)?;
    let k = labels.len();
    let polys: Vec<SparsePoly> = es.iter().map(|r| r.e.clone()).collect();
    let res = quad.gram(&polys)?;
    let entry = |i: usize, j: usize| res[i.min(j)][i.max(j)].clone().expect("filled");
    let mut checks = Vec::new();
    for i in 0..k {
        let r = entry(i, i);
        let expected = mass / to_f64(&es[i].rel_norm);
        checks.push(check(
            format!("<E{:?},E{:?}>", labels[i], labels[i]),
            &r,
            expected,
            rel(r.re, expected),
            tol(1e-3),
            expected,
        ));
    }
    for i in 0..k {
        for j in i + 1..k {
            let r = entry(i, j);
            let scale = (entry(i, i).re * entry(j, j).re).abs().sqrt();
            checks.push(check(
                format!("<E{:?},E{:?}>", labels[i], labels[j]),
                &r,
                0.0,
                r.re.abs() / scale,
                tol(1e-3),
                scale,
            ));
        }
    }
    let entries = (0..k).map(|i| (0..k).map(|j| entry(i, j).re).collect()).collect();
    Ok(report(
        "orthogonality",
        params,
        spec,
        checks,
        Some(GramMatrix { labels, entries }),
    ))
}

/// `⟨E⁺,E⁺⟩₊` against `1/N₊` for dominant λ with `λ₁+λ₂ ≤ 2`.
pub fn norms_suite(params: &Params, spec: &QuadratureSpec, tolerance: Option<f64>) -> Result<NumericReport> {
    let tol = |default: f64| tolerance.unwrap_or(default);
    let eng = WilsonEngine::new(N, params.clone());
    let quad = Quadrature::new(spec, WeightKind::Plus, params, QUAD_TOL)?;
    let g = gustafson_constant(params, N)?;
    let mut checks = Vec::new();
    for l in [vec![0, 0], vec![1, 0], vec![1, 1], vec![2, 0]] {
        let e = eng.symmetric_e_plus(&l)?;
        let r = quad.inner(&e, &e)?;
        let expected = g / to_f64(&eng.relative_norm_plus(&l)?);
        checks.push(check(
            format!("<E+{l:?},E+{l:?}>_plus"),
            &r,
            expected,
            rel(r.re, expected),
            tol(1e-3),
            expected,
        ));
    }
    Ok(report("norms", params, spec, checks, None))
}

/// `⟨Zf,g⟩ = ⟨f,Zg⟩` for `Z = T₀, T₁, T₂` and `X₁`.
pub fn selfadjoint_suite(params: &Params, spec: &QuadratureSpec, tolerance: Option<f64>) -> Result<NumericReport> {
    let tol = |default: f64| tolerance.unwrap_or(default);
    let quad = Quadrature::new(spec, WeightKind::Full, params, QUAD_TOL)?;
    let rep = Representation::new(N, params.clone());
    let x = |i| SparsePoly::var(N, i);
    let c = |v| SparsePoly::constant(N, v);
    let pairs = [
        (x(0), x(1)),
        (&x(0).pow(2) + &c(q(1, 3)), &(&x(0) * &x(1)) + &x(1).scale(&int(2))),
    ];
    let ops = [
        (Op::T(0), tol(1e-3)),
        (Op::T(1), tol(1e-3)),
        (Op::T(2), tol(1e-3)),
        (Op::X(1), tol(1e-10)),
    ];
    let mut checks = Vec::new();
    for (op, tol) in &ops {
        for (k, (f, g)) in pairs.iter().enumerate() {
            let (zf, zg) = (rep.apply(op, f), rep.apply(op, g));
            let a = quad.inner(&zf, g)?;
            let b = quad.inner(f, &zg)?;
            let diff = quad.inner_difference(&zf, g, f, &zg)?;
            let scale = a.re.abs().max(b.re.abs()).max(f64::MIN_POSITIVE);
            let mut ch = check(
                format!("{op:?} pair {k}"),
                &diff,
                0.0,
                diff.re.abs() / scale,
                *tol,
                scale,
            );
            ch.value = a.re;
            ch.expected = b.re;
            checks.push(ch);
        }
    }
    Ok(report("selfadjoint", params, spec, checks, None))
}

/// Names accepted by [`run_numeric_suite`].
pub const NUMERIC_SUITES: [&str; 4] = ["constant", "orthogonality", "norms", "selfadjoint"];

/// Runs a suite by name; `tolerance` replaces every per-check default.
pub fn run_numeric_suite(
    name: &str,
    params: &Params,
    spec: &QuadratureSpec,
    tolerance: Option<f64>,
) -> Result<NumericReport> {
    match name {
        "constant" => constant_suite(params, spec, tolerance),
        "orthogonality" => orthogonality_suite(params, spec, tolerance),
        "norms" => norms_suite(params, spec, tolerance),
        "selfadjoint" => selfadjoint_suite(params, spec, tolerance),
        other => Err(Error::Config(format!("unknown quadrature suite {other:?}"))),
    }
}
