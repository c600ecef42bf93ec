//! Acceptance suite: every criterion is exercised at zero tolerance (exact
//! coordinate equality) and prints one pass/fail line. Each criterion is a
//! test; run with `cargo test -p quasihopf-cli --test acceptance`.
//!
//! Subjects: the group algebra of Z/2 (KZ2), its twist with the nontrivial
//! associator (H2TW), Sweedler's four-dimensional Hopf algebra (SW4),
//! trivial module algebras over each, and the quasi-smash products
//! QS(k,KZ2), QS(H2TW,H2TW), QS(k,SW4). There is no comodule structure on k
//! over H2TW (the associator class obstructs it), so the quasi-smash entry
//! over H2TW is the one over the regular comodule.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use quasihopf::catalog::{self, Payload};
use quasihopf::comodule::{quasi_smash, quasismash_can_inverse, quasismash_total_integral};
use quasihopf::derived::{compute_pq, verify_pq_identities, verify_uv};
use quasihopf::files;
use quasihopf::integrals::{
    check_s_of_t, frobenius_theta_t, integral_data, verify_integral_identities, verify_theta,
};
use quasihopf::linmap::LinearMap;
use quasihopf::module_algebra::{invariants, ModuleAlgebra};
use quasihopf::morita::{
    can_maps, can_matrix, equivalence_suite, gauge_twist, morita_bundle, theta_relation,
    uv_elements,
};
use quasihopf::quasihopf::{compute_gauge_f, verify_quasi_hopf, QuasiHopfAlgebra};
use quasihopf::report::Status;
use quasihopf::scalar::Field;

fn hopf(name: &str) -> QuasiHopfAlgebra {
    catalog::quasi_hopf(name, Field::Rational).unwrap()
}

fn module_entry(name: &str, field: Field) -> (QuasiHopfAlgebra, ModuleAlgebra) {
    match catalog::catalog_get(name, field).unwrap().payload {
        Payload::Module(h, a) => (h, a),
        _ => panic!("{name} is not a module-algebra entry"),
    }
}

fn pass(criterion: &str, detail: &str) {
    println!("criterion {criterion}: PASS — {detail}");
}

fn within(start: Instant, limit: Duration, what: &str) {
    let elapsed = start.elapsed();
    assert!(
        elapsed <= limit,
        "{what} took {elapsed:?}, over the {limit:?} budget"
    );
}

#[test]
fn criterion_01_axiom_suites() {
    let start = Instant::now();
    for name in ["KZ2", "H2TW", "SW4"] {
        let t0 = Instant::now();
        let h = hopf(name);
        let report = verify_quasi_hopf(&h, name);
        assert!(report.all_passed(), "{name}: {report}");
        within(t0, Duration::from_secs(1), name);
    }
    // Deliberately corrupted variants fail at the documented equation.
    {
        let mut h = hopf("KZ2");
        let mut counit = LinearMap::zeros(Field::Rational, 1, 2);
        counit.set(0, 0, Field::Rational.one());
        h.bialgebra.counit = counit; // ε(g) = 0
        let report = verify_quasi_hopf(&h, "KZ2 broken counit");
        let check = report.check("counit").unwrap();
        assert_eq!(check.status, Status::Fail);
        assert_eq!(check.witness, Some(vec![1]));
    }
    {
        let mut h = hopf("H2TW");
        // Shrinking one associator coordinate breaks the pentagon.
        let mut phi = h.phi.clone();
        phi.set(&[1, 1, 1], Field::Rational.zero());
        h.bialgebra.phi = phi;
        let report = verify_quasi_hopf(&h, "H2TW broken associator");
        assert_eq!(report.check("pentagon").unwrap().status, Status::Fail);
    }
    {
        let mut h = hopf("H2TW");
        h.alpha = vec![Field::Rational.one(), Field::Rational.zero()];
        let report = verify_quasi_hopf(&h, "H2TW alpha = 1");
        assert_eq!(
            report.check("antipode-zigzag-forward").unwrap().status,
            Status::Fail
        );
    }
    {
        let mut h = hopf("SW4");
        h.antipode = LinearMap::identity(Field::Rational, 4); // not anti-hom
        let report = verify_quasi_hopf(&h, "SW4 identity antipode");
        assert_eq!(
            report.check("antipode-anti-hom").unwrap().status,
            Status::Fail
        );
    }
    within(start, Duration::from_secs(10), "criterion 1");
    pass("1", "axiom suites pass on all three algebras; corruptions fail at the named equation");
}

#[test]
fn criterion_02_derived_element_identities() {
    let start = Instant::now();
    for name in ["KZ2", "H2TW"] {
        let h = hopf(name);
        let pq = compute_pq(&h).unwrap();
        let report = verify_pq_identities(&h, &pq);
        assert!(report.all_passed(), "{name}: {report}");
        assert_eq!(report.checks.len(), 12, "{name}: twelve identities");
        let (f, f_inv) = compute_gauge_f(&h).unwrap();
        let uv = quasihopf::derived::compute_uv(&h, &f, &f_inv, &pq).unwrap();
        let uv_report = verify_uv(&h, &uv);
        assert!(uv_report.all_passed(), "{name}: {uv_report}");
    }
    within(start, Duration::from_secs(1), "criterion 2");
    pass("2", "twelve p/q identities and four U/V relations hold exactly on KZ2 and H2TW");
}

#[test]
fn criterion_03_integrals_match_frozen_values() {
    let q = |n: i64| Field::Rational.integer(n);
    let expected = [
        ("KZ2", vec![q(1), q(1)], vec![q(1), q(1)], vec![q(1), q(0)]),
        ("H2TW", vec![q(1), q(1)], vec![q(1), q(1)], vec![q(0), q(1)]),
        (
            "SW4",
            vec![q(0), q(0), q(1), q(1)],
            vec![q(1), q(-1), q(0), q(0)],
            vec![q(1), q(0), q(0), q(0)],
        ),
    ];
    for (name, t, gamma, lambda) in expected {
        let h = hopf(name);
        let data = integral_data(&h).unwrap();
        assert_eq!(data.integral_dim, 1, "{name}");
        assert_eq!(data.t, t, "{name}: t");
        assert_eq!(data.gamma, gamma, "{name}: gamma");
        assert_eq!(data.lambda, lambda, "{name}: lambda");
        assert!(check_s_of_t(&h, &data).all_passed(), "{name}: S(t)");
        assert!(
            verify_integral_identities(&h, &data.t).unwrap().all_passed(),
            "{name}"
        );
    }
    pass("3", "one-dimensional integral spaces with the frozen t, gamma, lambda; S(t) law exact");
}

#[test]
fn criterion_04_frobenius_isomorphism() {
    for name in ["KZ2", "H2TW", "SW4"] {
        let h = hopf(name);
        let data = integral_data(&h).unwrap();
        let report = verify_theta(&h, &data).unwrap();
        assert!(report.all_passed(), "{name}: {report}");
        assert_eq!(report.check("theta-two-sided-inverse").unwrap().status, Status::Pass);
        assert_eq!(report.check("theta-h-linear").unwrap().status, Status::Pass);
    }
    pass("4", "theta_t bijective and H-linear on all three algebras; both composites identity");
}

#[test]
fn criterion_05_morita_context_laws() {
    let start = Instant::now();
    for name in ["TRIV(KZ2)", "QS(H2TW,H2TW)"] {
        let (h, a) = module_entry(name, Field::Rational);
        let bundle = morita_bundle(&h, &a).unwrap();
        assert!(bundle.context.report.all_passed(), "{name}: {}", bundle.context.report);
        for check in [
            "pairing-b-balanced",
            "pairing-b-bilinear",
            "pairing-b-lands-in-invariants",
            "pairing-smash-balanced",
            "pairing-smash-left-linear",
            "pairing-smash-right-linear",
            "morita-assoc-left",
            "morita-assoc-right",
        ] {
            assert_eq!(
                bundle.context.report.check(check).unwrap().status,
                Status::Pass,
                "{name}: {check}"
            );
        }
    }
    within(start, Duration::from_secs(10), "criterion 5");
    pass("5", "every Morita context law holds over every basis tuple on both subjects");
}

#[test]
fn criterion_06_galois_bridge() {
    for name in ["QS(H2TW,H2TW)", "QS(k,SW4)"] {
        let (h, a) = module_entry(name, Field::Rational);
        let pq = compute_pq(&h).unwrap();
        let b = invariants(&h, &a).unwrap();
        let uv = uv_elements(&h, &pq).unwrap();
        let galois = can_maps(&h, &a, &b, &pq, &uv).unwrap();
        assert!(galois.report.all_passed(), "{name}: {}", galois.report);
        assert_eq!(galois.report.check("xi-compose-can").unwrap().status, Status::Pass);
        let data = integral_data(&h).unwrap();
        let theta = frobenius_theta_t(&h, &data.t, &pq).unwrap();
        let bundle = morita_bundle(&h, &a).unwrap();
        let bridge = theta_relation(&h, &a, &theta, &galois.can, &bundle.context.pairing_smash);
        assert!(bridge.all_passed(), "{name}: {bridge}");
    }
    pass("6", "Xi∘can = can' and (I⊗theta_t)∘can = [−,−] as exact matrix identities");
}

#[test]
fn criterion_07_quasismash_can_inverse() {
    let start = Instant::now();
    let subjects = [
        ("KZ2", "K(KZ2)", 4usize),
        ("H2TW", "REG(H2TW)", 8),
        ("SW4", "K(SW4)", 16),
    ];
    for (hopf_name, comodule_name, expected_dim) in subjects {
        let h = hopf(hopf_name);
        let c = match catalog::catalog_get(comodule_name, Field::Rational).unwrap().payload {
            Payload::Comodule(_, c) => c,
            _ => panic!("{comodule_name} is not a comodule entry"),
        };
        let (qs, qs_report) = quasi_smash(&h, &c).unwrap();
        assert!(qs_report.all_passed(), "{comodule_name}: {qs_report}");
        let pq = compute_pq(&h).unwrap();
        let b = invariants(&h, &qs.module_algebra).unwrap();
        let (quotient, can, _) = can_matrix(&h, &qs.module_algebra, &b, &pq).unwrap();
        assert_eq!(can.codomain_dim(), expected_dim, "{comodule_name}");
        let (_, report) = quasismash_can_inverse(&h, &qs, &quotient, &can).unwrap();
        assert!(report.all_passed(), "{comodule_name}: {report}");
        let (_, total) = quasismash_total_integral(&h, &qs).unwrap();
        assert!(total.all_passed(), "{comodule_name}: {total}");
    }
    within(start, Duration::from_secs(30), "criterion 7");
    pass("7", "the explicit can inverse composes to the identity both ways (dims 4, 8, 16)");
}

#[test]
fn criterion_08_equivalence_suite_across_the_catalog() {
    let mut cases: Vec<(String, Field)> = [
        "TRIV(KZ2)",
        "TRIV(H2TW)",
        "TRIV(SW4)",
        "QS(k,KZ2)",
        "QS(k,SW4)",
        "QS(H2TW,H2TW)",
    ]
    .iter()
    .map(|n| (n.to_string(), Field::Rational))
    .collect();
    cases.push(("TRIV(KZ2)".to_string(), Field::Fp(2)));
    cases.push(("QS(k,KZ2)".to_string(), Field::Fp(2)));

    for (name, field) in cases {
        let entry = catalog::catalog_get(&name, field).unwrap();
        let (h, a) = match entry.payload {
            Payload::Module(h, a) => (h, a),
            _ => panic!("{name} is not a module-algebra entry"),
        };
        let outcome = equivalence_suite(&h, &a).unwrap();
        assert!(
            outcome.report.all_passed(),
            "{name} over {field}: {}",
            outcome.report
        );
        assert!(
            outcome.violations.is_empty(),
            "{name} over {field}: violated implications {:?}",
            outcome.violations
        );
        let expected = entry.file.expected.flags.unwrap_or_else(|| {
            // The char-2 trivial case: all flags false.
            let mut m = BTreeMap::new();
            for k in outcome.flags.keys() {
                m.insert(k.clone(), false);
            }
            m
        });
        for (k, v) in &expected {
            assert_eq!(outcome.flags[k], *v, "{name} over {field}: flag {k}");
        }
    }
    // The char-2 trivial case has every flag false, including the
    // counit-at-A flag (k⊗_B k → k stays bijective, which the expected
    // block records).
    let entry = catalog::catalog_get("TRIV(KZ2)", Field::Fp(2)).unwrap();
    let (h, a) = match entry.payload {
        Payload::Module(h, a) => (h, a),
        _ => unreachable!(),
    };
    let outcome = equivalence_suite(&h, &a).unwrap();
    for key in [
        "can-surjective",
        "can-bijective",
        "morita-smash-surjective",
        "morita-smash-bijective",
        "eps-smash-bijective",
        "pairing-b-surjective",
        "total-integral",
        "trace-one",
        "strong-structure",
    ] {
        assert!(!outcome.flags[key], "char 2: {key} should be false");
    }
    pass("8", "zero violated implications across the catalog; char-2 flags all false, quasi-smash flags all true");
}

#[test]
fn criterion_09_gauge_invariance() {
    for (hopf_name, gauge_name, qs_name) in [
        ("KZ2", "F(KZ2)", "QS(k,KZ2)"),
        ("H2TW", "F(H2TW)", "QS(H2TW,H2TW)"),
    ] {
        let (h, f) = match catalog::catalog_get(gauge_name, Field::Rational).unwrap().payload {
            Payload::Gauge(h, f) => (h, f),
            _ => panic!("{gauge_name} is not a gauge entry"),
        };
        let (_, a) = module_entry(qs_name, Field::Rational);
        let twist = gauge_twist(&h, Some(&a), &f).unwrap();
        assert!(twist.report.all_passed(), "{hopf_name}: {}", twist.report);
        for check in [
            "galois-verdict-match",
            "total-integral-match",
            "smash-iso-bijective",
            "smash-iso-multiplicative",
            "smash-iso-unit",
            "invariants-preserved",
        ] {
            assert_eq!(
                twist.report.check(check).unwrap().status,
                Status::Pass,
                "{hopf_name}: {check}"
            );
        }
        assert_eq!(twist.report.verdicts["galois-before"], true);
        assert_eq!(twist.report.verdicts["galois-after"], true);
    }
    pass("9", "twisted algebras pass all axioms; Galois verdicts and total integrals are twist-invariant");
}

#[test]
fn criterion_10_cli_round_trips_and_exit_codes() {
    let qha = env!("CARGO_BIN_EXE_qha");
    let corpus = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../catalog/v1")
        .canonicalize()
        .expect("catalog corpus directory");

    // Byte-identical round-trips over the whole corpus.
    let mut seen = 0;
    for entry in std::fs::read_dir(&corpus).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("json") {
            continue;
        }
        let bytes = std::fs::read_to_string(&path).unwrap();
        let value: serde_json::Value = serde_json::from_str(&bytes).unwrap();
        let format = value["format"].as_str().unwrap();
        let emitted = match format {
            files::CATALOG_FORMAT => {
                let f: files::CatalogFile = serde_json::from_value(value).unwrap();
                files::emit(&f)
            }
            files::ALGEBRA_FORMAT => {
                let f: files::AlgebraFile = serde_json::from_value(value).unwrap();
                files::emit(&f)
            }
            files::MODULE_ALGEBRA_FORMAT => {
                let f: files::ModuleAlgebraFile = serde_json::from_value(value).unwrap();
                files::emit(&f)
            }
            files::COMODULE_ALGEBRA_FORMAT => {
                let f: files::ComoduleAlgebraFile = serde_json::from_value(value).unwrap();
                files::emit(&f)
            }
            files::GAUGE_FORMAT => {
                let f: files::GaugeFile = serde_json::from_value(value).unwrap();
                files::emit(&f)
            }
            other => panic!("unexpected format {other} in corpus"),
        };
        assert_eq!(emitted, bytes, "round trip differs for {}", path.display());
        seen += 1;
    }
    assert!(seen >= 40, "corpus should hold the full catalog, found {seen}");

    // Exit-code contract.
    let run = |args: &[&str]| {
        Command::new(qha)
            .args(args)
            .output()
            .expect("qha runs")
            .status
            .code()
            .unwrap()
    };
    // All checks pass, verdicts are results: exit 0.
    assert_eq!(run(&["suite", "catalog:QS(H2TW,H2TW)"]), 0);
    assert_eq!(run(&["galois", "catalog:TRIV(KZ2)"]), 0);
    assert_eq!(
        run(&["verify", corpus.join("h2tw.hopf.json").to_str().unwrap()]),
        0
    );
    // A mathematical failure: exit 1.
    let broken = {
        let text = std::fs::read_to_string(corpus.join("h2tw.hopf.json")).unwrap();
        let mut file: files::AlgebraFile = serde_json::from_str(&text).unwrap();
        file.phi = file
            .phi
            .into_iter()
            .filter(|e| e.indices != vec![1, 1, 1])
            .collect();
        let dir = std::env::temp_dir().join("qha-acceptance");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("h2tw_broken.json");
        std::fs::write(&path, files::emit(&file)).unwrap();
        path
    };
    assert_eq!(run(&["verify", broken.to_str().unwrap()]), 1);
    // Input and usage errors: exit 2.
    assert_eq!(run(&["verify", "catalog:NOSUCH"]), 2);
    assert_eq!(run(&["verify", "/nonexistent/path.json"]), 2);
    assert_eq!(run(&["catalog", "H2TW", "--field", "fp:2"]), 2);
    assert_eq!(run(&["nonsense-subcommand"]), 2);
    pass("10", "golden round-trips byte-identical; exit codes 0/1/2 honored on the corpus");
}
