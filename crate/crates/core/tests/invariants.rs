//! Supplementary property suites beyond the acceptance gate: canonical-map
//! injectivity on hereditary restrictions, the split/glue operations, the
//! top-element isomorphism, and the membership threshold family.

use ultracalc::suites;

const SEED: u64 = 977;

#[test]
fn tau_is_injective_on_hereditary_restrictions() {
    let r = suites::tau_injectivity_suite(SEED, 100);
    assert!(r.pass(), "{:?}", r.failures);
}

#[test]
fn split_and_glue_round_trip() {
    let r = suites::decomposition_suite(SEED, 50);
    assert!(r.pass(), "{:?}", r.failures);
}

#[test]
fn cofinal_meet_closed_subsets_reach_the_top() {
    let r = suites::top_isomorphism_suite(SEED, 50);
    assert!(r.pass(), "{:?}", r.failures);
}

#[test]
fn membership_threshold_family() {
    let r = suites::membership_threshold_suite(SEED, 50);
    assert!(r.pass(), "{:?}", r.failures);
}
