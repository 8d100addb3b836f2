//! Acceptance suite: one test per verification criterion, at the pinned
//! tolerances. These are the same checks `vdw selfcheck` runs; each test
//! prints its own pass/fail line through the harness.

use std::process::Command;

use vdw_cli::selfcheck::{self, Anchors};

fn assert_criterion(result: selfcheck::CriterionResult) {
    assert!(result.passed, "criterion {} ({}) failed: {}", result.id, result.name, result.detail);
    println!("criterion {:2} {:<26} {}", result.id, result.name, result.detail);
}

#[test]
fn acceptance_01_london_constant() {
    assert_criterion(selfcheck::c01_london_constant(&Anchors::default()));
}

#[test]
fn acceptance_02_casimir_polder_constant() {
    assert_criterion(selfcheck::c02_casimir_polder_constant(&Anchors::default()));
}

#[test]
fn acceptance_03_route_equivalence() {
    assert_criterion(selfcheck::c03_route_equivalence());
}

#[test]
fn acceptance_04_slope_crossover() {
    assert_criterion(selfcheck::c04_slope_crossover());
}

#[test]
fn acceptance_05_spectral_vs_normal_modes() {
    assert_criterion(selfcheck::c05_spectral_vs_modes());
}

#[test]
fn acceptance_06_decay_thresholds() {
    assert_criterion(selfcheck::c06_thresholds());
}

#[test]
fn acceptance_07_kato_engine() {
    assert_criterion(selfcheck::c07_kato_engine());
}

#[test]
fn acceptance_08_special_functions() {
    assert_criterion(selfcheck::c08_special_functions());
}

#[test]
fn acceptance_09_replacement_consistency() {
    assert_criterion(selfcheck::c09_replacement_consistency());
}

#[test]
fn acceptance_10_determinism() {
    assert_criterion(selfcheck::c10_determinism());

    // the report itself must also be byte-identical across runs of the
    // binary, and exit 0 on a healthy build
    let run =
        || Command::new(env!("CARGO_BIN_EXE_vdw")).arg("selfcheck").output().expect("binary runs");
    let a = run();
    let b = run();
    assert_eq!(a.status.code(), Some(0), "selfcheck must pass on a fresh build");
    assert_eq!(a.stdout, b.stdout, "selfcheck report must be byte-identical");
    let text = String::from_utf8(a.stdout).expect("utf-8");
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 10);
}
