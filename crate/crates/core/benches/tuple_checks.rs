//! Parallel vs sequential tuple sweeps on the heaviest exact checks: the
//! associativity of a 64-dimensional smash product (262144 basis triples in
//! exact rational arithmetic) and the full axiom suite of the twisted
//! two-dimensional algebra.
//!
//! With the default `parallel` feature the `par` series runs on the rayon
//! pool; without it both series run sequentially and should coincide.

use criterion::{criterion_group, criterion_main, Criterion};

use quasihopf::catalog;
use quasihopf::comodule::quasi_smash;
use quasihopf::exec::Exec;
use quasihopf::module_algebra::smash_product_with;
use quasihopf::quasihopf::verify_quasi_hopf_with;
use quasihopf::scalar::Field;

fn bench_smash_associativity(c: &mut Criterion) {
    let h = catalog::sw4(Field::Rational).unwrap();
    let reg = catalog::regular_comodule(&h).unwrap();
    let (qs, report) = quasi_smash(&h, &reg).unwrap();
    assert!(report.all_passed(), "{report}");
    let (smash, report) = smash_product_with(&h, &qs.module_algebra, Exec::Par).unwrap();
    assert!(report.all_passed(), "{report}");
    assert_eq!(smash.dim(), 64);

    let mut group = c.benchmark_group("smash64-associativity");
    group.sample_size(10);
    group.bench_function("seq", |b| {
        b.iter(|| {
            assert!(smash
                .algebra
                .associativity_failure_with(Exec::Seq)
                .is_none())
        })
    });
    group.bench_function("par", |b| {
        b.iter(|| {
            assert!(smash
                .algebra
                .associativity_failure_with(Exec::Par)
                .is_none())
        })
    });
    group.finish();
}

fn bench_axiom_suite(c: &mut Criterion) {
    let h = catalog::h2tw(Field::Rational).unwrap();
    let mut group = c.benchmark_group("h2tw-axioms");
    group.bench_function("seq", |b| {
        b.iter(|| assert!(verify_quasi_hopf_with(&h, "bench", Exec::Seq).all_passed()))
    });
    group.bench_function("par", |b| {
        b.iter(|| assert!(verify_quasi_hopf_with(&h, "bench", Exec::Par).all_passed()))
    });
    group.finish();
}

criterion_group!(benches, bench_smash_associativity, bench_axiom_suite);
criterion_main!(benches);
