use std::time::Instant;

use ncverify_core::catalog::{build, AlgebraId};
use ncverify_core::hopf::{
    central_coproduct_residuals, check_coproduct_on_relations, counit, counit_and_coassoc_axioms,
    delta, elect_convention, og_closure, Convention, TensorPolynomial,
};
use ncverify_core::Rational;

#[test]
fn hopf_battery() {
    let start = Instant::now();
    let d = build(AlgebraId::D).unwrap();
    let pres = &d.presentation;
    for c in Convention::ALL {
        let r = check_coproduct_on_relations(pres, c);
        for e in r.failures() {
            println!("{c} {} {}", e.item, e.detail);
        }
    }
    assert_eq!(elect_convention(pres), vec![Convention::B]);
    assert!(counit_and_coassoc_axioms(pres, Convention::B).passed());
    assert!(og_closure(pres, Convention::B).passed());
    for (k, v) in [
        ("z", 16),
        ("omega", -16),
        ("theta", 16),
        ("q", 4),
        ("s", -4),
    ] {
        assert_eq!(counit(d.element(k), pres).unwrap(), Rational::integer(v));
    }
    for (n, r) in central_coproduct_residuals(&d, Convention::B).unwrap() {
        println!("{n}: {} terms", r.len());
    }
    let g = d.parse("g").unwrap();
    assert_eq!(
        delta(&g, pres, Convention::B).unwrap(),
        TensorPolynomial::product(&g, &g)
    );
    println!("took {:?}", start.elapsed());
}
