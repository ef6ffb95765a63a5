use std::collections::BTreeSet;

use segsum_laws::{Expectation, OPERATIONS, REGISTRY};

#[test]
fn ids_are_unique() {
    let ids: BTreeSet<&str> = REGISTRY.iter().map(|l| l.id).collect();
    assert_eq!(ids.len(), REGISTRY.len());
}

#[test]
fn every_operation_is_covered_by_some_law() {
    let covered: BTreeSet<&str> = REGISTRY.iter().flat_map(|l| l.covers.iter().copied()).collect();
    let ops: BTreeSet<&str> = OPERATIONS.iter().copied().collect();
    let unknown: Vec<_> = covered.difference(&ops).collect();
    assert!(unknown.is_empty(), "laws cover unlisted operations: {unknown:?}");
    let uncovered: Vec<_> = ops.difference(&covered).collect();
    assert!(uncovered.is_empty(), "operations without a law: {uncovered:?}");
}

#[test]
fn expected_failures_are_the_known_ones() {
    let failing: BTreeSet<&str> = REGISTRY
        .iter()
        .filter(|l| l.expectation == Expectation::FailsWithWitness)
        .map(|l| l.id)
        .collect();
    let expected: BTreeSet<&str> = [
        "cp-distributivity-set-plus",
        "set-plus-nonidempotent",
        "segs-set-collapses",
    ]
    .into_iter()
    .collect();
    assert_eq!(failing, expected);
}

#[test]
fn only_the_zero_axiom_is_optional() {
    let optional: Vec<&str> = REGISTRY.iter().filter(|l| l.optional).map(|l| l.id).collect();
    assert_eq!(optional, ["join-zero-axiom"]);
}

#[test]
fn every_law_has_a_description() {
    for law in REGISTRY {
        assert!(!law.description.is_empty(), "{}", law.id);
        assert!(!law.covers.is_empty(), "{}", law.id);
    }
}
