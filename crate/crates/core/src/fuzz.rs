//! Randomized ring-axiom and filtration checks on normal forms.

use crate::catalog::CatalogEntry;
use crate::error::Result;
use crate::ncpoly::{
    level_degree, FreePolynomial, Letter, Monomial, NCPolynomial, Presentation, Reducer,
    ValidationReport, Word,
};
use crate::random;

fn as_free(p: &NCPolynomial) -> FreePolynomial {
    FreePolynomial {
        terms: p
            .terms()
            .map(|(m, c)| {
                let letters: Vec<Letter> = m.letters().collect();
                (c.clone(), Word::from_letters(&letters))
            })
            .collect(),
    }
}

/// `(ab)c = a(bc)`, `a(b + c) = ab + ac` and `NF(NF(a)) = NF(a)`.
pub fn associativity(pres: &Presentation, samples: usize, seed: u64) -> Result<ValidationReport> {
    let mut rng = random::rng(seed);
    let mut red = Reducer::new(pres);
    let mut report = ValidationReport::default();
    for i in 0..samples {
        let a = random::polynomial(&mut rng, pres, 3, 3);
        let b = random::polynomial(&mut rng, pres, 3, 3);
        let c = random::polynomial(&mut rng, pres, 3, 3);
        let ab = red.multiply(&a, &b)?;
        let bc = red.multiply(&b, &c)?;
        let left = red.multiply(&ab, &c)?;
        let right = red.multiply(&a, &bc)?;
        let assoc = left.sub(&right);
        let dist = red
            .multiply(&a, &b.add(&c))?
            .sub(&ab)
            .sub(&red.multiply(&a, &c)?);
        let idem = red.normal_form(&as_free(&a))? == a;
        let ok = assoc.is_zero() && dist.is_zero() && idem;
        let detail = if ok {
            String::new()
        } else {
            format!(
                "assoc residual {}, distributivity residual {}, idempotent {idem}",
                assoc.display(pres.names()),
                dist.display(pres.names())
            )
        };
        report.push(format!("triple {i}"), ok, detail);
    }
    Ok(report)
}

/// `NF(a t^-1 t) = NF(t t^-1 a) = a` for each invertible generator `t`.
pub fn laurent_roundtrip(
    pres: &Presentation,
    samples: usize,
    seed: u64,
) -> Result<ValidationReport> {
    let mut rng = random::rng(seed);
    let mut red = Reducer::new(pres);
    let mut report = ValidationReport::default();
    let inv: Vec<usize> = (0..pres.len())
        .filter(|&g| pres.generators()[g].invertible)
        .collect();
    for i in 0..samples {
        let a = random::polynomial(&mut rng, pres, 3, 3);
        for &g in &inv {
            let t = red.letter(Letter::new(g));
            let ti = red.letter(Letter::inv(g));
            let ati = red.multiply(&a, &ti)?;
            let r1 = red.multiply(&ati, &t)?;
            let tia = red.multiply(&ti, &a)?;
            let r2 = red.multiply(&t, &tia)?;
            let ok = r1 == a && r2 == a;
            report.push(
                format!("{} sample {i} t={}", pres.name(), pres.names()[g]),
                ok,
                String::new(),
            );
        }
    }
    Ok(report)
}

/// `deg NF(ab) ≤ deg a + deg b` in total degree, and
/// `level(NF(ab - ba)) < level(a) + level(b)` on monomials of positive level.
pub fn filtration(pres: &Presentation, samples: usize, seed: u64) -> Result<ValidationReport> {
    let mut rng = random::rng(seed);
    let mut red = Reducer::new(pres);
    let mut report = ValidationReport::default();
    let positive = |rng: &mut random::CheckRng| -> Monomial {
        loop {
            let m = random::monomial(rng, pres, 3);
            if pres.monomial_level(&m) > 0 {
                return m;
            }
        }
    };
    for i in 0..samples {
        let a = random::polynomial(&mut rng, pres, 3, 3);
        let b = random::polynomial(&mut rng, pres, 3, 3);
        let ab = red.multiply(&a, &b)?;
        let ok = match (a.total_degree(), b.total_degree(), ab.total_degree()) {
            (Some(da), Some(db), Some(dab)) => dab <= da + db,
            _ => true,
        };
        report.push(format!("total degree pair {i}"), ok, String::new());

        let (ma, mb) = (positive(&mut rng), positive(&mut rng));
        let (pa, pb) = (NCPolynomial::monomial(ma), NCPolynomial::monomial(mb));
        let c = red.commutator(&pa, &pb)?;
        let bound = pres.monomial_level(&ma) + pres.monomial_level(&mb);
        let ok = c.is_zero() || level_degree(&c, pres)? < bound;
        report.push(format!("graded commutator pair {i}"), ok, String::new());
    }
    Ok(report)
}

/// `parse(print(p)) = p` on random polynomials.
pub fn parse_roundtrip(
    entry: &CatalogEntry,
    samples: usize,
    seed: u64,
) -> Result<ValidationReport> {
    let pres = &entry.presentation;
    let mut rng = random::rng(seed);
    let mut report = ValidationReport::default();
    for i in 0..samples {
        let mut p = random::polynomial(&mut rng, pres, 3, 4);
        if i % 3 == 0 {
            p = p.scale(&crate::Rational::new(1, (i % 5 + 2) as i64));
        }
        let text = entry.display(&p);
        let back = entry.parse(&text)?;
        report.push(format!("sample {i}"), back == p, text);
    }
    Ok(report)
}
