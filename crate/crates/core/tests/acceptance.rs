//! Acceptance suite: one test per criterion, each driving the corresponding
//! seeded verification suite at its pinned size and printing a pass/fail
//! line (visible with `--nocapture`). All checks are exact unless the suite
//! itself states a floating tolerance (the cone suite compares the exact LP
//! against the float oracle at 1e-9; the membership suite excludes float
//! margins below 1e-6).

use ultracalc::suites::{self, SuiteReport};

const SEED: u64 = 20260808;

fn run(criterion: &str, report: SuiteReport) {
    let verdict = if report.pass() { "PASS" } else { "FAIL" };
    println!("criterion {criterion} [{}]: {verdict} ({} checks)", report.name, report.cases);
    if !report.pass() {
        for f in &report.failures {
            println!("  - {f}");
        }
        panic!("criterion {criterion} failed with {} findings", report.failures.len());
    }
}

#[test]
fn criterion_01_remark_regression() {
    run("1", suites::remark_regression());
}

#[test]
fn criterion_02_pushforward_preserves_conditions() {
    run("2", suites::pushforward_suite(SEED, 200));
}

#[test]
fn criterion_03_hereditary_intersection_identity() {
    run("3", suites::hereditary_intersection_suite(SEED, 100));
}

#[test]
fn criterion_04_quotient_presentations() {
    run("4", suites::presentation_suite(SEED, 100));
}

#[test]
fn criterion_05_covering_sign_algebra() {
    run("5", suites::sign_algebra_suite(SEED, 100));
}

#[test]
fn criterion_06_cone_algebra_and_float_oracle() {
    run("6", suites::cone_suite(SEED, 200));
}

#[test]
fn criterion_07_simplicial_covers() {
    run("7", suites::cover_suite(SEED, 50));
}

#[test]
fn criterion_08_fourier_identities() {
    run("8", suites::fourier_identity_suite(SEED, 100));
}

#[test]
fn criterion_09_kernel_decomposition_bijectivity() {
    run("9", suites::bijectivity_suite(SEED, 100));
}

#[test]
fn criterion_10_semigroup_restriction_membership() {
    run("10", suites::semigroup_membership_suite(SEED, 100));
}
