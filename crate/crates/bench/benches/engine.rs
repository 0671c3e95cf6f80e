use criterion::{black_box, criterion_group, criterion_main, Criterion};

use wilson_bench::fresh_engine;
use wilson_core::numeric::{constant_suite, QuadratureSpec};
use wilson_core::operators::{relation_suite, run_relations, Params, Representation};
use wilson_core::suites::{run_exact_suite, SuiteConfig};

fn wilson_polynomials(c: &mut Criterion) {
    c.bench_function("build p_lambda, n=2, |lambda| <= 3", |b| {
        b.iter(|| fresh_engine(2).build_range(black_box(3)).unwrap())
    });
    c.bench_function("build p_lambda, n=3, |lambda| <= 2", |b| {
        b.iter(|| fresh_engine(3).build_range(black_box(2)).unwrap())
    });
    c.bench_function("symmetric E+ (2,0), n=2", |b| {
        b.iter(|| fresh_engine(2).symmetric_e_plus(black_box(&[2, 0])).unwrap())
    });
}

fn relations(c: &mut Criterion) {
    let mut g = c.benchmark_group("relations");
    g.sample_size(10);
    let p = Params::p_star();
    let rep = Representation::new(2, p.clone());
    let rels = relation_suite(2, &p);
    g.bench_function("n=2, degree 4", |b| b.iter(|| run_relations(&rep, &rels, black_box(4))));
    g.bench_function("eigen suite n=2", |b| {
        b.iter(|| run_exact_suite("eigen", &SuiteConfig::new(2, p.clone())).unwrap())
    });
    g.finish();
}

fn quadrature(c: &mut Criterion) {
    let mut g = c.benchmark_group("quadrature");
    g.sample_size(10);
    let p = Params::p_star();
    let spec = QuadratureSpec::default();
    g.bench_function("constant suite", |b| {
        b.iter(|| constant_suite(&p, &spec, None).unwrap())
    });
    g.finish();
}

criterion_group!(benches, wilson_polynomials, relations, quadrature);
criterion_main!(benches);
