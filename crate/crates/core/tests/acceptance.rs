//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::process::ExitCode;
use std::time::Instant;

use wilson_core::numeric::{run_numeric_suite, QuadratureSpec, NUMERIC_SUITES};
use wilson_core::operators::Params;
use wilson_core::suites::{run_exact_suite, ExactReport, SuiteConfig};
use wilson_core::Result;

/// Outcome of one criterion: whether it passed and a short note.
type Verdict = Result<(bool, String)>;
type Criterion = fn() -> Verdict;

fn param_sets() -> [(&'static str, Params); 2] {
    [("P*", Params::p_star()), ("P_alt", Params::p_alt())]
}

/// Runs exact suites over both parameter sets and collects failing checks.
fn exact(runs: &[(&str, usize, Option<usize>, Option<i64>)]) -> Verdict {
    let mut failing = Vec::new();
    let mut total = 0;
    for (tag, params) in param_sets() {
        for &(suite, n, degree, lambda_sum) in runs {
            let mut cfg = SuiteConfig::new(n, params.clone());
            cfg.degree = degree;
            cfg.lambda_sum = lambda_sum;
            let r: ExactReport = run_exact_suite(suite, &cfg)?;
            total += r.checks.len();
            failing.extend(
                r.checks
                    .iter()
                    .filter(|c| !c.holds)
                    .map(|c| format!("{tag} n={n} {suite}: {}", c.name)),
            );
        }
    }
    Ok(if failing.is_empty() {
        (true, format!("{total} exact checks"))
    } else {
        (false, failing.join("; "))
    })
}

fn relations() -> Verdict {
    exact(&[
        ("relations", 2, Some(6), None),
        ("gdaha", 2, Some(6), None),
        ("relations", 3, Some(4), None),
        ("gdaha", 3, Some(4), None),
    ])
}

fn numeric() -> Verdict {
    let spec = QuadratureSpec::default();
    let mut failing = Vec::new();
    let mut total = 0;
    for name in NUMERIC_SUITES {
        let r = run_numeric_suite(name, &Params::p_star(), &spec, None)?;
        total += r.checks.len();
        failing.extend(r.checks.iter().filter(|c| !c.passed).map(|c| {
            format!(
                "{name}: {} error {:.2e} estimate {:.2e}",
                c.name, c.error, c.error_estimate
            )
        }));
    }
    Ok(if failing.is_empty() {
        (true, format!("{total} quadrature checks"))
    } else {
        (false, failing.join("; "))
    })
}

/// Serialized reports of a spread of suites, computed from scratch.
fn snapshot() -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (suite, n, degree) in [
        ("relations", 2, Some(4)),
        ("eigen", 2, None),
        ("symmetric", 2, None),
        ("fourier", 3, Some(2)),
    ] {
        let mut cfg = SuiteConfig::new(n, Params::p_alt());
        cfg.degree = degree;
        out.push(serde_json::to_string_pretty(&run_exact_suite(suite, &cfg)?).expect("serializable"));
    }
    let r = run_numeric_suite("constant", &Params::p_star(), &QuadratureSpec::default(), None)?;
    out.push(serde_json::to_string_pretty(&r).expect("serializable"));
    Ok(out)
}

fn determinism() -> Verdict {
    let first = snapshot()?;
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("thread pool")
        .install(snapshot)?;
    let again = snapshot()?;
    let same = first == single && first == again;
    Ok((
        same,
        format!("{} reports, 3 runs incl. one single-threaded", first.len()),
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("exact relation suite (n=2 D=6, n=3 D=4, two parameter sets)", relations),
        ("eigen and basis suite", || exact(&[("eigen", 2, None, Some(3))])),
        ("evaluation formula", || exact(&[("evaluation", 2, None, Some(3))])),
        ("duality", || exact(&[("duality", 2, None, Some(2))])),
        ("norms and Fourier transform", || {
            exact(&[("norms", 2, None, Some(3)), ("fourier", 2, Some(3), None)])
        }),
        ("symmetric suite", || exact(&[("symmetric", 2, None, Some(2))])),
        ("numeric suite at P*", numeric),
        ("determinism", determinism),
    ];
    let mut all = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, note) = match run() {
            Ok(v) => v,
            Err(e) => (false, format!("error: {e}")),
        };
        all &= ok;
        println!(
            "criterion {}: {} | {name} | {note} | {:.1}s",
            k + 1,
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
