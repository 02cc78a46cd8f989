use std::time::Instant;

use ncverify_core::catalog::{build, AlgebraId};
use ncverify_core::fuzz::{associativity, filtration, laurent_roundtrip, parse_roundtrip};
use ncverify_core::ncpoly::ValidationReport;

fn assert_clean(name: &str, r: &ValidationReport) {
    for e in r.failures() {
        println!("{name}: {} {}", e.item, e.detail);
    }
    assert!(r.passed(), "{name}");
}

#[test]
fn ring_axioms_on_normal_forms() {
    let start = Instant::now();
    let d = build(AlgebraId::D).unwrap();
    let r = associativity(&d.presentation, 200, 1).unwrap();
    assert_eq!(r.entries.len(), 200);
    assert_clean("assoc", &r);
    println!("assoc {:?}", start.elapsed());
}

#[test]
fn localized_algebras_are_associative() {
    for id in [AlgebraId::DLX, AlgebraId::DLU, AlgebraId::H, AlgebraId::SL2] {
        let e = build(id).unwrap();
        assert_clean(id.as_str(), &associativity(&e.presentation, 40, 2).unwrap());
    }
}

#[test]
fn laurent_roundtrips() {
    for id in [AlgebraId::D, AlgebraId::DLX, AlgebraId::DLU, AlgebraId::OG] {
        let e = build(id).unwrap();
        assert_clean(
            id.as_str(),
            &laurent_roundtrip(&e.presentation, 30, 3).unwrap(),
        );
    }
}

#[test]
fn filtrations() {
    let d = build(AlgebraId::D).unwrap();
    assert_clean("filtration", &filtration(&d.presentation, 100, 4).unwrap());
}

#[test]
fn printing_round_trips() {
    let d = build(AlgebraId::D).unwrap();
    assert_clean("parse", &parse_roundtrip(&d, 200, 5).unwrap());
}
