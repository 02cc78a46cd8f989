use proptest::prelude::*;

use ncverify_core::catalog::{build, AlgebraId, CatalogEntry};
use ncverify_core::checks::{matches, REGISTRY};
use ncverify_core::membership::{
    closed_form_count, monomial_count, solve_membership, MembershipProblem, MembershipStatus,
};
use ncverify_core::ncpoly::{apply_map, Letter, Monomial, NCPolynomial};
use ncverify_core::random;
use ncverify_core::Rational;

fn d() -> &'static CatalogEntry {
    use std::sync::OnceLock;
    static D: OnceLock<CatalogEntry> = OnceLock::new();
    D.get_or_init(|| build(AlgebraId::D).unwrap())
}

/// Small polynomials of `D`: `g` exponent in `-1..=1`, others in `0..=1`.
fn poly() -> impl Strategy<Value = NCPolynomial> {
    let term = (-1i16..=1, prop::array::uniform5(0i16..=1), -2i64..=2);
    prop::collection::vec(term, 1..4).prop_map(|terms| {
        let mut p = NCPolynomial::zero();
        for (a, rest, c) in terms {
            let mut e = vec![a];
            e.extend(rest);
            p.add_term(Monomial::from_exponents(&e), Rational::integer(c));
        }
        p
    })
}

/// Polynomials of total degree at most 2.
fn small_poly() -> impl Strategy<Value = NCPolynomial> {
    let term = (-1i16..=1, 0usize..6, 0usize..6, -2i64..=2);
    prop::collection::vec(term, 1..4).prop_map(|terms| {
        let mut p = NCPolynomial::zero();
        for (a, i, j, c) in terms {
            let mut e = vec![a, 0, 0, 0, 0, 0];
            if i > 0 {
                e[i] += 1;
            }
            if j > 0 && a == 0 {
                e[j] += 1;
            }
            p.add_term(Monomial::from_exponents(&e), Rational::integer(c));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative(a in poly(), b in poly(), c in poly()) {
        let mut red = d().reducer();
        let ab = red.multiply(&a, &b).unwrap();
        let bc = red.multiply(&b, &c).unwrap();
        prop_assert_eq!(red.multiply(&ab, &c).unwrap(), red.multiply(&a, &bc).unwrap());
    }

    #[test]
    fn sigma_is_multiplicative(a in poly(), b in poly()) {
        let mut red = d().reducer();
        let ab = red.multiply(&a, &b).unwrap();
        let sa = apply_map(d().sigma(), &mut red, &a).unwrap();
        let sb = apply_map(d().sigma(), &mut red, &b).unwrap();
        let lhs = apply_map(d().sigma(), &mut red, &ab).unwrap();
        prop_assert_eq!(lhs, red.multiply(&sa, &sb).unwrap());
    }

    #[test]
    fn q_and_s_are_sigma_normal(a in poly()) {
        let mut red = d().reducer();
        let sa = apply_map(d().sigma(), &mut red, &a).unwrap();
        for n in ["q", "s"] {
            let n = d().element(n);
            prop_assert_eq!(red.multiply(n, &a).unwrap(), red.multiply(&sa, n).unwrap());
        }
    }

    #[test]
    fn centre_commutes(a in poly()) {
        let mut red = d().reducer();
        for c in ["z", "omega", "theta"] {
            prop_assert!(red.commutator(d().element(c), &a).unwrap().is_zero());
        }
    }

    #[test]
    fn g_inverse_round_trip(a in poly()) {
        let mut red = d().reducer();
        let g = red.letter(Letter::new(0));
        let gi = red.letter(Letter::inv(0));
        let agi = red.multiply(&a, &gi).unwrap();
        prop_assert_eq!(red.multiply(&agi, &g).unwrap(), a);
    }

    #[test]
    fn printing_round_trips(a in poly(), k in 1i64..6) {
        let a = a.scale(&Rational::new(1, k));
        let back = d().parse(&d().display(&a)).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn constructed_members_have_witnesses(h1 in small_poly(), h2 in small_poly()) {
        let mut red = d().reducer();
        let q = d().element("q");
        let s = d().element("s");
        let target = red.multiply(q, &h1).unwrap().add(&red.multiply(s, &h2).unwrap());
        let problem = MembershipProblem {
            target: target.clone(),
            ideal_generators: vec![q.clone(), s.clone()],
            normal: vec![true, true],
            cofactor_degree_bound: 2,
        };
        let r = solve_membership(&problem, &d().presentation).unwrap();
        match r.status {
            MembershipStatus::Witness(h) => {
                let sum = red.multiply(q, &h[0]).unwrap().add(&red.multiply(s, &h[1]).unwrap());
                prop_assert_eq!(sum, target);
            }
            other => prop_assert!(false, "no witness: {:?}", other),
        }
    }

    #[test]
    fn base_inverse_and_leibniz(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let a = random::base(&mut rng, true, true);
        let b = random::base(&mut rng, true, true);
        let ab = a.mul(&b);
        prop_assert_eq!(ab.partial_u(), a.partial_u().mul(&b).add(&a.mul(&b.partial_u())));
        prop_assert_eq!(ab.partial_x(), a.partial_x().mul(&b).add(&a.mul(&b.partial_x())));
        if let Some(ai) = a.inverse() {
            prop_assert_eq!(a.mul(&ai), ncverify_core::tower::CommBase::one());
        }
    }
}

proptest! {
    #[test]
    fn growth_closed_form(n in 0u64..1500) {
        prop_assert_eq!(monomial_count(n), closed_form_count(n));
    }

    #[test]
    fn every_id_selects_itself(i in 0..REGISTRY.len()) {
        prop_assert!(matches(REGISTRY[i].id, REGISTRY[i].id));
        prop_assert!(matches("all", REGISTRY[i].id));
    }
}
