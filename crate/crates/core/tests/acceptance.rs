//! One test per acceptance criterion; each prints its report line.

use mmds_core::criteria::{run, SweepConfig};

fn check(id: u8) {
    let r = run(id, &SweepConfig::default());
    println!("{r}");
    assert!(r.passed(), "{r}");
}

#[test]
fn criterion_01_oracle_cross_validation() {
    check(1);
}

#[test]
fn criterion_02_dp_table_invariant() {
    check(2);
}

#[test]
fn criterion_03_dp_state_space_shape() {
    check(3);
}

#[test]
fn criterion_04_interval_greedy() {
    check(4);
}

#[test]
fn criterion_05_one_in_three_reduction() {
    check(5);
}

#[test]
fn criterion_06_split_reduction() {
    check(6);
}

#[test]
fn criterion_07_sat_reduction_and_cover() {
    check(7);
}

#[test]
fn criterion_08_clique_reduction_structure() {
    check(8);
}

#[test]
fn criterion_09_forcing_soundness() {
    check(9);
}

#[test]
fn criterion_10_monotonicity() {
    check(10);
}
