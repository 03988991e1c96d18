//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! with the measured values. Criteria share one validator (resonance data,
//! multiplier tables, eigenvector corrections, coefficient table) through a
//! process-wide cache; a mutex serializes them so the reported wall times are
//! not contended.

use std::sync::{Mutex, OnceLock};
use stl_core::validation::{CriterionResult, ValidationConfig, Validator};

static VALIDATOR: OnceLock<Validator> = OnceLock::new();
static GATE: Mutex<()> = Mutex::new(());

fn validator() -> &'static Validator {
    VALIDATOR.get_or_init(|| Validator::new(ValidationConfig::default()))
}

fn check(run: impl FnOnce(&Validator) -> CriterionResult) {
    let _gate = GATE.lock().unwrap();
    let result = run(validator());
    println!("{}", result.line());
    assert!(result.passed, "{}", result.line());
}

#[test]
fn criterion_01_resonance_constants() {
    check(|v| v.criterion_1());
}

#[test]
fn criterion_02_multiplier_oracle_equivalence() {
    check(|v| v.criterion_2());
}

#[test]
fn criterion_03_exact_surface_coefficients() {
    check(|v| v.criterion_3());
}

#[test]
fn criterion_04_wavenumber_support_table() {
    check(|v| v.criterion_4());
}

#[test]
fn criterion_05_coefficient_table() {
    check(|v| v.criterion_5());
}

#[test]
fn criterion_06_product_identity() {
    check(|v| v.criterion_6());
}

#[test]
fn criterion_07_b30_certificate() {
    check(|v| v.criterion_7());
}

#[test]
fn criterion_08_ellipse_constants() {
    check(|v| v.criterion_8());
}

#[test]
fn criterion_09_order_of_accuracy() {
    check(|v| v.criterion_9());
}

#[test]
fn criterion_10_structural_invariants() {
    check(|v| v.criterion_10());
}

#[test]
fn criterion_11_negative_control() {
    check(|v| v.criterion_11());
}
