//! Acceptance suite: each test runs one criterion from the library's
//! self-test module and prints a single PASS/FAIL line (visible with
//! `cargo test --test acceptance -- --nocapture`).

use canbase::selftest::{self, CriterionReport};
use canbase::Config;

fn run(criterion: fn(&Config) -> CriterionReport) {
    let report = criterion(&Config::default());
    let status = if report.passed { "PASS" } else { "FAIL" };
    println!(
        "{status} — criterion {}: {} ({:?}; {})",
        report.id, report.name, report.elapsed, report.detail
    );
    assert!(
        report.passed,
        "criterion {} ({}) failed: {}",
        report.id, report.name, report.detail
    );
}

#[test]
fn criterion_1_two_slot_canonical_table() {
    run(selftest::criterion_1);
}

#[test]
fn criterion_2_six_slot_coefficient_goldens() {
    run(selftest::criterion_2);
}

#[test]
fn criterion_3_bar_invariance_certificates() {
    run(selftest::criterion_3);
}

#[test]
fn criterion_4_projection_comparison() {
    run(selftest::criterion_4);
}

#[test]
fn criterion_5_order_characterization_vs_oracle() {
    run(selftest::criterion_5);
}

#[test]
fn criterion_6_prime_map_poset_isomorphism() {
    run(selftest::criterion_6);
}

#[test]
fn criterion_7_crystal_component_characterization() {
    run(selftest::criterion_7);
}

#[test]
fn criterion_8_linear_type_positivity() {
    run(selftest::criterion_8);
}

#[test]
fn criterion_9_dominant_conversion_word_property() {
    run(selftest::criterion_9);
}
