//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! All symbolic checks are exact (zero tolerance). The runtime budgets are
//! desktop targets and are enforced in optimized builds only; run with
//! `cargo test -p qmat --release --test acceptance -- --test-threads=1 --nocapture`
//! to see the per-criterion lines with timings.

use qmat::gradedideal::GradedIdeal;
use qmat::qmatrix::oqm_presentation;
use qmat::strata::{
    enumerate_rc, hspec_count, kappa_kernel_generators, kappa_map, krc_generators, HPrimeSpec,
    HspecCount,
};
use qmat::verify::{run_suite, SuiteId, SuiteOptions, SuiteReport};
use std::time::Instant;

fn run(id: SuiteId, n: usize) -> SuiteReport {
    let report = run_suite(id, n, &SuiteOptions::default());
    for f in report.failures.iter().take(5) {
        eprintln!(
            "  {} n={} FAILED case: {}\n    lhs: {}\n    rhs: {}",
            report.suite, report.n, f.case, f.lhs, f.rhs
        );
    }
    report
}

fn finish(criterion: &str, desc: &str, ok: bool, start: Instant, budget_s: f64) {
    let elapsed = start.elapsed().as_secs_f64();
    let within = elapsed < budget_s;
    let timed_ok = ok && (within || cfg!(debug_assertions));
    println!(
        "criterion {} ({}): {} ({:.2}s, budget {:.0}s)",
        criterion,
        desc,
        if timed_ok { "PASS" } else { "FAIL" },
        elapsed,
        budget_s
    );
    assert!(ok, "criterion {} failed", criterion);
    if !cfg!(debug_assertions) {
        assert!(
            within,
            "criterion {} exceeded its runtime budget: {:.2}s > {:.0}s",
            criterion, elapsed, budget_s
        );
    }
}

#[test]
fn criterion_1_confluence() {
    let start = Instant::now();
    let r = run(SuiteId::S1, 3);
    let ok = r.passed() && r.cases == 1000;
    finish("1", "strategy-independent normal forms", ok, start, 10.0);
}

#[test]
fn criterion_2_minor_equivalence() {
    let start = Instant::now();
    let mut ok = true;
    for n in 2..=4 {
        let r = run(SuiteId::S2, n);
        if n == 4 {
            // one case per size-balanced key
            ok &= r.cases == 70;
        }
        ok &= r.passed();
    }
    finish("2", "minor recursion equals permutation oracle", ok, start, 60.0);
}

#[test]
fn criterion_3_appendix_identities() {
    let all_start = Instant::now();
    let mut ok = true;
    for (id, n) in [
        (SuiteId::S4, 4),
        (SuiteId::S5, 4),
        (SuiteId::S6, 4),
        (SuiteId::S8, 4),
        (SuiteId::S7, 3),
    ] {
        let start = Instant::now();
        let r = run(id, n);
        ok &= r.passed();
        let elapsed = start.elapsed().as_secs_f64();
        println!(
            "  {} ({}) n={}: {} cases, {} failures, {:.2}s",
            r.suite,
            r.label,
            r.n,
            r.cases,
            r.failures.len(),
            elapsed
        );
        if !cfg!(debug_assertions) {
            ok &= elapsed < 300.0;
        }
    }
    finish("3", "minor identity suites", ok, all_start, 1500.0);
}

#[test]
fn criterion_4_comultiplication_of_minors() {
    let start = Instant::now();
    let r = run(SuiteId::S3, 3);
    finish("4", "comultiplication of minors", r.passed(), start, 120.0);
}

#[test]
fn criterion_5_congruence_suites() {
    let start = Instant::now();
    let r9 = run(SuiteId::S9, 3);
    let r10 = run(SuiteId::S10, 3);
    finish(
        "5",
        "nested-minor and dominance congruences with certificates",
        r9.passed() && r10.passed(),
        start,
        600.0,
    );
}

#[test]
fn criterion_6_stratum_map_machinery() {
    let start = Instant::now();
    let mut ok = true;
    for n in 2..=3 {
        ok &= run(SuiteId::S11, n).passed();
        ok &= run(SuiteId::S12, n).passed();
    }
    ok &= run(SuiteId::S13, 4).passed();
    ok &= run(SuiteId::S14, 4).passed();
    ok &= run(SuiteId::S15, 3).passed();
    finish("6", "stratum map suites", ok, start, 600.0);
}

#[test]
fn criterion_7_quantitative_reproduction() {
    let start = Instant::now();
    let mut ok = true;
    ok &= hspec_count(2, 0) == HspecCount::Known(1);
    ok &= hspec_count(2, 1) == HspecCount::Known(9);
    ok &= hspec_count(2, 2) == HspecCount::Known(4);
    ok &= hspec_count(3, 1) == HspecCount::Known(49);
    ok &= hspec_count(3, 2) == HspecCount::Unknown;
    let r = run(SuiteId::S16, 2);
    ok &= r.passed();
    finish("7", "invariant-prime counts and 2x2 catalog", ok, start, 60.0);
}

#[test]
fn criterion_8_kernel_evidence_bounded_degree() {
    // The kernel-equals-stratum-ideal statement is checked only as
    // bounded-degree evidence (total degree <= 4 at n = 2), never asserted
    // as a theorem: every bounded-degree kernel element lies in the stratum
    // ideal, and every stratum ideal generator is killed by the map.
    let start = Instant::now();
    let mut ok = true;
    for t in 0..=2usize {
        for pair in enumerate_rc(2, t) {
            let spec = HPrimeSpec {
                pair: pair.clone(),
                q_plus_kill: vec![],
                q_minus_kill: vec![],
                known_generators: None,
            };
            let kappa = kappa_map(2, &spec).expect("valid pair");
            let ideal = krc_generators(2, &pair);
            for g in kappa_kernel_generators(2, &kappa, 4) {
                let inside = if ideal.is_trivial() {
                    g.is_zero()
                } else {
                    ideal.contains(&g).expect("homogeneous kernel element")
                };
                if !inside {
                    let p = oqm_presentation(2);
                    eprintln!(
                        "  kernel element outside stratum ideal at {}: {}",
                        pair,
                        p.element_text(&g)
                    );
                    ok = false;
                }
            }
            for (g, _) in ideal.generators() {
                if !kappa.vanishes(g) {
                    ok = false;
                }
            }
        }
    }
    // evidence for the reverse inclusion only: report, never assert as proof
    let _ = GradedIdeal::new(oqm_presentation(2), vec![]).unwrap();
    finish(
        "8",
        "kernel = stratum ideal as bounded-degree evidence (n=2, deg <= 4)",
        ok,
        start,
        120.0,
    );
}
