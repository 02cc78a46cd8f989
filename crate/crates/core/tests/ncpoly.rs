use ncverify_core::catalog::{build, AlgebraId};
use ncverify_core::ncpoly::{
    apply_map, check_map_is_morphism, is_central, is_sigma_normal, level_degree,
    validate_presentation, AlgebraMap, Letter, Monomial, NCPolynomial, Presentation, Reducer,
};
use ncverify_core::Error;

fn nf(id: AlgebraId, text: &str) -> String {
    let e = build(id).unwrap();
    let p = e.parse(text).unwrap();
    e.display(&p)
}

fn same(id: AlgebraId, a: &str, b: &str) {
    let e = build(id).unwrap();
    assert_eq!(e.parse(a).unwrap(), e.parse(b).unwrap(), "{a} vs {b}");
}

#[test]
fn defining_relations_reduce() {
    same(AlgebraId::D, "y*x", "x*y - 1/2*x^2");
    same(AlgebraId::D, "x*y", "x*y");
    same(AlgebraId::D, "u*y", "y*u + 1 - g");
    same(AlgebraId::D, "v*zeta", "zeta*v + v");
    same(AlgebraId::D, "g*g^-1", "1");
    same(AlgebraId::D, "[x,g]", "0");
    same(AlgebraId::D, "[v,g]", "g*u");
    same(AlgebraId::D, "[zeta,y]", "y");
    same(AlgebraId::J, "[y,x]", "-1/2*x^2");
    same(AlgebraId::D, "[q,x]", "0");
}

#[test]
fn normal_form_printing() {
    assert_eq!(nf(AlgebraId::D, "v*x"), "x*v + x*u - g + 1");
    assert_eq!(nf(AlgebraId::D, "q*s - s*q"), "0");
    assert_eq!(nf(AlgebraId::D, "0"), "0");
    assert_eq!(nf(AlgebraId::D, "g^-2"), "g^-2");
    assert_eq!(nf(AlgebraId::D, "[y,x]"), "-1/2*x^2");
}

#[test]
fn negative_powers_need_invertible_generators() {
    let d = build(AlgebraId::D).unwrap();
    assert!(matches!(
        d.parse("x^-1"),
        Err(Error::NegativePowerNotInvertible(_))
    ));
    let lx = build(AlgebraId::DLX).unwrap();
    let p = lx.parse("x^-1").unwrap();
    assert_eq!(p, NCPolynomial::monomial(Monomial::generator(1, -1)));
}

#[test]
fn localized_rules() {
    same(AlgebraId::DLX, "v*x^-1", "x^-1*v - x^-1*u - x^-2*(1 - g)");
    same(AlgebraId::DLX, "x*v*x^-1", "v - (1 - g)*x^-1 - u");
    same(AlgebraId::DLU, "u*y*u^-1", "y + (1 - g)*u^-1");
}

#[test]
fn level_degrees() {
    let d = build(AlgebraId::D).unwrap();
    let lv = |t: &str| level_degree(&d.parse(t).unwrap(), &d.presentation).unwrap();
    assert_eq!(lv("y*zeta*v"), 3);
    assert_eq!(lv("g^5*x^2"), 0);
    assert_eq!(lv("v*y"), 2);
    assert_eq!(
        level_degree(&NCPolynomial::zero(), &d.presentation),
        Err(Error::ZeroPolynomial)
    );
}

#[test]
fn sigma_map_examples() {
    let d = build(AlgebraId::D).unwrap();
    let pres = &d.presentation;
    let mut red = d.reducer();
    let sigma = d.sigma();
    let y = red.generator("y");
    assert_eq!(
        apply_map(sigma, &mut red, &y).unwrap(),
        d.parse("y + 1/2*x").unwrap()
    );
    let x = red.generator("x");
    assert_eq!(apply_map(sigma, &mut red, &x).unwrap(), x);
    let sy = apply_map(sigma, &mut red, &y).unwrap();
    let ssy = apply_map(sigma, &mut red, &sy).unwrap();
    assert_eq!(ssy, d.parse("y + x").unwrap());
    assert_eq!(ssy, d.parse("g*y*g^-1").unwrap());
    assert!(check_map_is_morphism(sigma, pres, &mut d.reducer()).passed());
    assert!(check_map_is_morphism(&AlgebraMap::identity(pres), pres, &mut d.reducer()).passed());

    let bad = sigma
        .clone()
        .with(Letter::new(pres.gen("v")), d.parse("v + u").unwrap());
    let report = check_map_is_morphism(&bad, pres, &mut d.reducer());
    let failed: Vec<_> = report.failures().map(|e| e.item.clone()).collect();
    // u commutes with u^2, so only the [v,y] relation notices the change.
    assert_eq!(failed, vec!["v*y".to_string()]);
}

#[test]
fn sigma_normal_and_central() {
    let d = build(AlgebraId::D).unwrap();
    let pres = &d.presentation;
    for n in ["q", "s"] {
        assert_eq!(
            is_sigma_normal(d.element(n), d.sigma(), pres).unwrap(),
            None,
            "{n}"
        );
    }
    let x = d.parse("x").unwrap();
    let w = is_sigma_normal(&x, d.sigma(), pres).unwrap().unwrap();
    assert_eq!(w.letter, "zeta");
    assert!(!d.parse("x*v - (v - 1/2*u)*x").unwrap().is_zero());
    for c in ["z", "omega", "theta"] {
        assert_eq!(is_central(d.element(c), pres).unwrap(), None, "{c}");
    }
    let w = is_central(d.element("q"), pres).unwrap().unwrap();
    assert_eq!(w.letter, "y");
    assert_eq!(is_central(&NCPolynomial::one(), pres).unwrap(), None);
    same(AlgebraId::D, "z*theta", "omega^2");
}

#[test]
fn certificate_rejects_level_raising_rule() {
    let text = "name: bad\ngenerators: x, y\nlevel: y\ny*x = x*y + y^2\n";
    let pres = Presentation::from_text(text).unwrap();
    let report = validate_presentation(&pres);
    assert!(!report.passed());
    assert!(report.failures().any(|e| e.item.starts_with("certificate")));
    let og = build(AlgebraId::OG).unwrap();
    assert!(validate_presentation(&og.presentation).passed());
}

#[test]
fn step_budget_is_enforced() {
    let d = build(AlgebraId::D).unwrap();
    let tight = d.presentation.clone().with_step_budget(3);
    let mut red = Reducer::new(&tight);
    let e = red.parse("v^4*y^4");
    assert!(matches!(e, Err(Error::NonTerminating { .. })), "{e:?}");
}
