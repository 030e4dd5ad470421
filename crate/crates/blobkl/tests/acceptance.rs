//! Acceptance gate: one test per criterion, each driving the corresponding
//! named verification suite at its stated scale and runtime bound, printing
//! one pass/fail line. Run with `cargo test --test acceptance`.

use std::time::{Duration, Instant};

use blobkl::suites::{find, SuiteConfig, SuiteReport};

fn run(name: &str, cfg: &SuiteConfig) -> (SuiteReport, Duration) {
    let suite = find(name).unwrap_or_else(|| panic!("suite '{name}' is not registered"));
    let start = Instant::now();
    let report = suite.run(cfg).unwrap_or_else(|e| panic!("suite '{name}' errored: {e}"));
    (report, start.elapsed())
}

fn gate(criterion: usize, name: &str, cfg: &SuiteConfig, budget: Option<Duration>) -> SuiteReport {
    let (report, took) = run(name, cfg);
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    println!(
        "criterion {criterion:02} [{name}]: {verdict} — {} ({} ms)",
        report.summary,
        took.as_millis()
    );
    for finding in &report.findings {
        println!("  finding: {finding}");
    }
    for failure in &report.failures {
        println!("  counterexample: {failure}");
    }
    if let Some(budget) = budget {
        assert!(
            took <= budget,
            "criterion {criterion}: {name} took {took:?}, budget {budget:?}"
        );
    }
    assert!(report.passed(), "criterion {criterion} failed; see counterexamples above");
    report
}

fn default_cfg() -> SuiteConfig {
    SuiteConfig { seed: 42, instances: 200, ..Default::default() }
}

#[test]
fn criterion_01_worked_example_reproduction() {
    let rep = gate(1, "worked-example", &default_cfg(), Some(Duration::from_secs(1)));
    assert_eq!(rep.checks, 5);
}

#[test]
fn criterion_02_alcove_reproduction() {
    gate(2, "alcove-example", &default_cfg(), None);
}

#[test]
fn criterion_03_graded_dimension_vs_expansion_corpus() {
    let rep = gate(3, "theorem-graded-dim", &default_cfg(), Some(Duration::from_secs(60)));
    assert!(rep.checks >= 200, "corpus too small: {} instances", rep.checks);
}

#[test]
fn criterion_04_pascal_example_reproduction() {
    gate(4, "pascal-example", &default_cfg(), None);
}

#[test]
fn criterion_05_hook_algorithm_words() {
    gate(5, "hook-words", &default_cfg(), None);
}

#[test]
fn criterion_06_bott_samelson_oracle_equivalence() {
    let rep = gate(6, "bs-oracle", &default_cfg(), None);
    // all 2047 level-2 words up to length ten, plus 100 sampled higher-level
    assert_eq!(rep.checks, 2147);
}

#[test]
fn criterion_07_degree_formula_equivalence() {
    gate(7, "degree-formula", &default_cfg(), None);
}

#[test]
fn criterion_08_decomposition_vs_p_canonical_sweep() {
    let rep = gate(8, "blob-vs-soergel", &default_cfg(), Some(Duration::from_secs(120)));
    // gated comparisons cover p in {3, 5, 7}; the p = 2 runs complete and
    // appear only as findings
    assert!(rep.checks >= 180, "sweep too small: {} tables", rep.checks);
}

#[test]
fn criterion_09_resubstitution_identities() {
    gate(9, "resubstitution", &default_cfg(), None);
}

#[test]
fn criterion_10_positivity_and_bar_invariance() {
    let rep = gate(10, "positivity-bar", &default_cfg(), None);
    assert!(rep.checks >= 500, "need at least 500 randomized instances, got {}", rep.checks);
}
