use std::time::Instant;

use ncverify_core::catalog::build;
use ncverify_core::fractions::{
    bracket_report, express_generators, weyl_coordinates, FractionRing, WeylCase,
};

#[test]
fn weyl_cases() {
    for case in WeylCase::ALL {
        let start = Instant::now();
        let entry = build(case.algebra()).unwrap();
        let mut ring = FractionRing::new(&entry, case.center());
        let (w, election) = weyl_coordinates(&mut ring, case).unwrap();
        let br = bracket_report(&mut ring, &w).unwrap();
        for e in &br.entries {
            println!("{case} {} {} {}", e.item, e.ok, e.detail);
        }
        println!("{case} election {election:?}");
        let ex = express_generators(&mut ring, case).unwrap();
        for e in &ex.entries {
            println!("{case} {} {} {}", e.item, e.ok, e.detail);
        }
        println!("{case} took {:?}", start.elapsed());
        assert!(br.passed());
        assert!(ex.passed());
    }
}
