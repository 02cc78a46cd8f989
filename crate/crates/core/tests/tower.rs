use std::time::Instant;

use ncverify_core::catalog::{build, AlgebraId};
use ncverify_core::ncpoly::ValidationReport;
use ncverify_core::tower::{
    h_inner, invariant_ideal, ore_laws, pi_morphism, radical_tower, t_relations,
};

fn show(name: &str, r: &ValidationReport) {
    for e in &r.entries {
        println!(
            "{name}: {} {} {}",
            if e.ok { "ok " } else { "BAD" },
            e.item,
            e.detail
        );
    }
}

type Case<'a> = (&'a str, Box<dyn Fn() -> ValidationReport + 'a>);

#[test]
fn tower_battery() {
    let d = build(AlgebraId::D).unwrap();
    let cases: Vec<Case> = vec![
        ("T-relations", Box::new(t_relations)),
        ("pi", Box::new(|| pi_morphism(&d, 20, 7))),
        ("h-inner", Box::new(h_inner)),
        ("radical", Box::new(|| radical_tower(10, 3))),
        ("invariant", Box::new(|| invariant_ideal(20, 5))),
        ("ore", Box::new(|| ore_laws(50, 11))),
    ];
    for (name, f) in cases {
        let start = Instant::now();
        let r = f();
        show(name, &r);
        println!("{name} took {:?}", start.elapsed());
        assert!(r.passed(), "{name}");
    }
}
