use std::time::Instant;

use ncverify_core::catalog::{build, AlgebraId};
use ncverify_core::membership::{
    binomial, closed_form_count, cofactor_monomials, degree_subadditivity_fuzz, doubling_exponent,
    growth_table, monomial_count, solve_membership, solve_membership_with_cap, MembershipProblem,
    MembershipStatus,
};
use ncverify_core::ncpoly::{NCPolynomial, Reducer};
use ncverify_core::Error;

fn problem(target: NCPolynomial, gens: Vec<NCPolynomial>, d: u32) -> MembershipProblem {
    let normal = vec![true; gens.len()];
    MembershipProblem {
        target,
        ideal_generators: gens,
        normal,
        cofactor_degree_bound: d,
    }
}

#[test]
fn q_squared_lies_in_m0() {
    let d = build(AlgebraId::D).unwrap();
    let gens = d.m0_gens();
    let q = d.element("q");
    let mut red = Reducer::new(&d.presentation);
    let q2 = red.multiply(q, q).unwrap();
    let r = solve_membership(&problem(q2.clone(), gens.clone(), 2), &d.presentation).unwrap();
    let MembershipStatus::Witness(h) = r.status else {
        panic!("expected witness, got {:?}", r.status)
    };
    let mut sum = NCPolynomial::zero();
    for (n, c) in gens.iter().zip(&h) {
        sum = sum.add(&red.multiply(n, c).unwrap());
    }
    assert_eq!(sum, q2);
}

#[test]
fn s_not_in_qd_at_bound_4() {
    let start = Instant::now();
    let d = build(AlgebraId::D).unwrap();
    let r = solve_membership(
        &problem(d.element("s").clone(), vec![d.element("q").clone()], 4),
        &d.presentation,
    )
    .unwrap();
    println!("{r:?} {:?}", start.elapsed());
    assert_eq!(r.status, MembershipStatus::NoWitnessAtBound(4));
    assert!(r.rank <= r.unknowns);
}

#[test]
fn one_not_in_p0_at_bound_4() {
    let start = Instant::now();
    let d = build(AlgebraId::D).unwrap();
    let r = solve_membership(
        &problem(NCPolynomial::one(), d.p0_gens(), 4),
        &d.presentation,
    )
    .unwrap();
    println!(
        "unknowns {} rank {} {:?}",
        r.unknowns,
        r.rank,
        start.elapsed()
    );
    assert_eq!(r.status, MembershipStatus::NoWitnessAtBound(4));
}

#[test]
fn cofactor_set_contains_q_over_g() {
    let d = build(AlgebraId::D).unwrap();
    let ms = cofactor_monomials(&d.presentation, 2);
    let qg = d.parse("u*x*g^-1").unwrap();
    let m = *qg.monomials().next().unwrap();
    assert!(ms.contains(&m));
}

#[test]
fn memory_cap_is_reported() {
    let d = build(AlgebraId::D).unwrap();
    let r = solve_membership_with_cap(
        &problem(NCPolynomial::one(), d.p0_gens(), 4),
        &d.presentation,
        10,
    );
    assert!(matches!(r, Err(Error::BoundTooLargeForMemory { .. })));
}

#[test]
fn growth_counts() {
    let d = build(AlgebraId::D).unwrap();
    for n in 0..=6u32 {
        let brute = cofactor_monomials(&d.presentation, 6)
            .into_iter()
            .filter(|m| m.total_degree() <= n)
            .count() as u64;
        assert_eq!(monomial_count(n as u64), brute, "n = {n}");
    }
    for row in growth_table(40) {
        assert_eq!(row.monomial_count, row.expected_count);
    }
    assert_eq!(monomial_count(0), 1);
    assert_eq!(closed_form_count(1), 8);
    assert_eq!(monomial_count(2), 35);
    assert!((doubling_exponent(1000) - 6.0).abs() < 0.05);
    assert_eq!(binomial(1006, 6), binomial(1006, 1000));
}

#[test]
fn degree_is_subadditive() {
    let d = build(AlgebraId::D).unwrap();
    let out = degree_subadditivity_fuzz(&d.presentation, 100, 11).unwrap();
    assert!(out.failures.is_empty(), "{:?}", out.failures);
}
