//! Subcommand bodies. Each returns the JSON document and whether every
//! selected check passed.

use serde::Serialize;
use serde_json::{json, Value};

use wilson_core::exactpoly::{format_rational, TermJson};
use wilson_core::numeric::{run_numeric_suite, NUMERIC_SUITES};
use wilson_core::operators::l_eigenvalue;
use wilson_core::suites::{run_exact_suite, SuiteConfig, EXACT_SUITES};
use wilson_core::weyl::{is_dominant, weights_up_to};
use wilson_core::wilson::{WilsonEngine, WilsonRecordJson};
use wilson_core::Error;

use crate::config::{ConfigError, Settings};

/// Why a command did not produce a passing document.
#[derive(Debug)]
pub enum Failure {
    /// Bad input or parameters that the engine cannot work with: exit 2.
    Config(String),
    /// An internal identity failed while building the output: exit 1.
    Verification(String),
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::Config(e.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(_) => Failure::Verification(e.to_string()),
            _ => Failure::Config(e.to_string()),
        }
    }
}

pub struct Outcome {
    pub document: Value,
    pub passed: bool,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn params_json(s: &Settings) -> Result<Value, Failure> {
    let p = s.params()?;
    Ok(json!([&p.t0, &p.u0, &p.t, &p.tn, &p.un].map(format_rational)))
}

#[derive(Serialize)]
struct ComputeOut {
    #[serde(flatten)]
    record: WilsonRecordJson,
    /// The evaluation product formula, which must equal `eval`.
    eval_formula: String,
    consistent: bool,
}

pub fn compute(s: &Settings) -> Result<Outcome, Failure> {
    let n = s.n()?;
    let lambda = s.lambda(n)?;
    let eng = WilsonEngine::new(n, s.params()?);
    let rec = eng.record(&lambda)?;
    let formula = eng.evaluation_value(&lambda)?;
    let consistent = formula == rec.eval_at_minus_x0;
    let out = ComputeOut {
        record: rec.to_json(),
        eval_formula: format_rational(&formula),
        consistent,
    };
    Ok(Outcome {
        document: to_value(&out),
        passed: consistent,
    })
}

#[derive(Serialize)]
struct SymmetricOut {
    lambda: Vec<i64>,
    poly: Vec<TermJson>,
    /// Eigenvalue of the Wilson operator `L`.
    eigenvalue: String,
    /// Rational part of the symmetric norm.
    rel_norm_plus: String,
    l_eigen_holds: bool,
}

pub fn compute_symmetric(s: &Settings) -> Result<Outcome, Failure> {
    let n = s.n()?;
    let lambda = s.lambda(n)?;
    if !is_dominant(&lambda) {
        return Err(Failure::Config(format!("lambda {lambda:?} is not dominant")));
    }
    let params = s.params()?;
    let eng = WilsonEngine::new(n, params.clone());
    let e = eng.symmetric_e_plus(&lambda)?;
    let holds = eng.verify_l_eigen(&lambda)?;
    let out = SymmetricOut {
        poly: e.to_json_terms(),
        eigenvalue: format_rational(&l_eigenvalue(&lambda, &params)),
        rel_norm_plus: format_rational(&eng.relative_norm_plus(&lambda)?),
        l_eigen_holds: holds,
        lambda,
    };
    Ok(Outcome {
        document: to_value(&out),
        passed: holds,
    })
}

#[derive(Serialize)]
struct SpectrumPoint {
    lambda: Vec<i64>,
    gamma: Vec<String>,
    x: Vec<String>,
    eval: String,
    rel_norm: String,
}

pub fn spectrum(s: &Settings) -> Result<Outcome, Failure> {
    let n = s.n()?;
    let range = s.i64_opt("range")?.unwrap_or(2);
    let eng = WilsonEngine::new(n, s.params()?);
    eng.check_genericity(range)?;
    let mut points = Vec::new();
    for l in weights_up_to(n, range) {
        let rec = eng.record(&l)?;
        points.push(SpectrumPoint {
            gamma: rec.gamma.iter().map(format_rational).collect(),
            x: eng.x_point(&l).iter().map(format_rational).collect(),
            eval: format_rational(&rec.eval_at_minus_x0),
            rel_norm: format_rational(&rec.rel_norm),
            lambda: l,
        });
    }
    Ok(Outcome {
        document: json!({ "n": n, "params": params_json(s)?, "range": range, "points": to_value(&points) }),
        passed: true,
    })
}

fn wrap(reports: Vec<Value>, passed: bool) -> Outcome {
    Outcome {
        document: json!({ "passed": passed, "reports": reports }),
        passed,
    }
}

pub fn verify(s: &Settings) -> Result<Outcome, Failure> {
    let suites = s.suites()?;
    for name in &suites {
        if !EXACT_SUITES.contains(&name.as_str()) {
            return Err(Failure::Config(format!(
                "unknown suite {name:?}; expected one of {}",
                EXACT_SUITES.join(", ")
            )));
        }
    }
    let mut cfg = SuiteConfig::new(s.n()?, s.params()?);
    cfg.degree = s.usize_opt("degree")?;
    cfg.lambda_sum = s.i64_opt("lambda_sum")?;
    let mut reports = Vec::new();
    let mut passed = true;
    for name in &suites {
        let r = run_exact_suite(name, &cfg)?;
        passed &= r.passed;
        reports.push(to_value(&r));
    }
    Ok(wrap(reports, passed))
}

pub fn quadrature(s: &Settings) -> Result<Outcome, Failure> {
    let suites = s.suites()?;
    for name in &suites {
        if !NUMERIC_SUITES.contains(&name.as_str()) {
            return Err(Failure::Config(format!(
                "unknown quadrature suite {name:?}; expected one of {}",
                NUMERIC_SUITES.join(", ")
            )));
        }
    }
    let n = s.n()?;
    if n != 2 {
        return Err(Failure::Config(format!("quadrature suites need n = 2, got {n}")));
    }
    let params = s.params()?;
    params.check_positive()?;
    let spec = s.quadrature_spec()?;
    let tol = s.f64_opt("tolerance")?;
    let mut reports = Vec::new();
    let mut passed = true;
    for name in &suites {
        let r = run_numeric_suite(name, &params, &spec, tol)?;
        passed &= r.passed;
        reports.push(to_value(&r));
    }
    Ok(wrap(reports, passed))
}
