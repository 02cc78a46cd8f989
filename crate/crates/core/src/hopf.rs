//! Coalgebra data on `D`: tensor powers, the coproduct, the counit and the
//! checks that they respect the defining relations.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{Algebra, Scalars};
use crate::catalog::CatalogEntry;
use crate::error::Result;
use crate::ncpoly::{
    apply_map, check_map_is_morphism, AlgebraMap, Letter, MapReport, Monomial, NCPolynomial,
    Presentation, Reducer, ValidationEntry, ValidationReport,
};
use crate::rational::Rational;

/// A rank-2 or rank-3 tensor over one presentation.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorPolynomial {
    terms: BTreeMap<Vec<Monomial>, Rational>,
}

impl TensorPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn pure(slots: Vec<Monomial>, c: Rational) -> Self {
        let mut t = Self::zero();
        t.add_term(slots, c);
        t
    }

    /// `a ⊗ b` for polynomials.
    pub fn product(a: &NCPolynomial, b: &NCPolynomial) -> Self {
        let mut t = Self::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                t.add_term(vec![*ma, *mb], ca * cb);
            }
        }
        t
    }

    pub fn add_term(&mut self, slots: Vec<Monomial>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(slots) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TensorPolynomial {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Monomial>, &Rational)> {
        self.terms.iter()
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> TensorDisplay<'a> {
        TensorDisplay { t: self, names }
    }
}

impl fmt::Debug for TensorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

pub struct TensorDisplay<'a> {
    t: &'a TensorPolynomial,
    names: &'a [String],
}

impl fmt::Display for TensorDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t.is_zero() {
            return f.write_str("0");
        }
        for (i, (slots, c)) in self.t.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            f.write_str("(")?;
            for (j, m) in slots.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ⊗ ")?;
                }
                if m.is_identity() {
                    f.write_str("1")?;
                } else {
                    write!(f, "{}", m.display(self.names))?;
                }
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Slotwise multiplication in `A ⊗ A` or `A ⊗ A ⊗ A`.
pub struct TensorAlgebra<'p> {
    pub rank: usize,
    red: Reducer<'p>,
}

impl<'p> TensorAlgebra<'p> {
    pub fn new(pres: &'p Presentation, rank: usize) -> Self {
        TensorAlgebra {
            rank,
            red: Reducer::new(pres),
        }
    }
}

impl Algebra for TensorAlgebra<'_> {
    type Elem = TensorPolynomial;

    fn zero(&self) -> TensorPolynomial {
        TensorPolynomial::zero()
    }
    fn one(&self) -> TensorPolynomial {
        TensorPolynomial::pure(vec![Monomial::identity(); self.rank], Rational::one())
    }
    fn add(&self, a: &TensorPolynomial, b: &TensorPolynomial) -> TensorPolynomial {
        a.add(b)
    }
    fn scale(&self, a: &TensorPolynomial, c: &Rational) -> TensorPolynomial {
        a.scale(c)
    }
    fn mul(&mut self, a: &TensorPolynomial, b: &TensorPolynomial) -> Result<TensorPolynomial> {
        let mut out = TensorPolynomial::zero();
        for (sa, ca) in &a.terms {
            for (sb, cb) in &b.terms {
                // Expand the slotwise products into a sum of pure tensors.
                let mut partial: Vec<(Vec<Monomial>, Rational)> = vec![(Vec::new(), ca * cb)];
                for (ma, mb) in sa.iter().zip(sb) {
                    let p = self.red.monomial_product(ma, mb)?;
                    let mut next = Vec::with_capacity(partial.len() * p.len());
                    for (slots, c) in &partial {
                        for (m, d) in p.terms() {
                            let mut s = slots.clone();
                            s.push(*m);
                            next.push((s, c * d));
                        }
                    }
                    partial = next;
                }
                for (s, c) in partial {
                    out.add_term(s, c);
                }
            }
        }
        Ok(out)
    }
    fn is_zero(&self, a: &TensorPolynomial) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &TensorPolynomial) -> String {
        a.display(self.red.presentation().names()).to_string()
    }
}

/// Where the group-like factor sits in `Δ(x)` and `Δ(y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `Δ(x) = x⊗g + 1⊗x`
    A,
    /// `Δ(x) = x⊗1 + g⊗x`
    B,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::A, Convention::B];

    pub fn formula(self) -> &'static str {
        match self {
            Convention::A => "Δ(x) = x⊗g + 1⊗x",
            Convention::B => "Δ(x) = x⊗1 + g⊗x",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::A => "A",
            Convention::B => "B",
        })
    }
}

fn gen(pres: &Presentation, name: &str) -> Monomial {
    Monomial::generator(pres.gen(name), 1)
}

/// Generator images of the coproduct of `D` under `conv`.
pub fn coproduct_map(pres: &Presentation, conv: Convention) -> AlgebraMap<TensorPolynomial> {
    let one = Monomial::identity();
    let one_r = Rational::one;
    let pure = |a: Monomial, b: Monomial| TensorPolynomial::pure(vec![a, b], one_r());
    let primitive = |a: Monomial| pure(a, one).add(&pure(one, a));
    let g = gen(pres, "g");
    let g_inv = Monomial::generator(pres.gen("g"), -1);
    let skew = |a: Monomial| match conv {
        Convention::A => pure(a, g).add(&pure(one, a)),
        Convention::B => pure(a, one).add(&pure(g, a)),
    };
    let (x, u, y, zeta, v) = (
        gen(pres, "x"),
        gen(pres, "u"),
        gen(pres, "y"),
        gen(pres, "zeta"),
        gen(pres, "v"),
    );
    AlgebraMap::new("delta", pres)
        .with(Letter::new(pres.gen("g")), pure(g, g))
        .with(Letter::inv(pres.gen("g")), pure(g_inv, g_inv))
        .with(Letter::new(pres.gen("x")), skew(x))
        .with(Letter::new(pres.gen("y")), skew(y))
        .with(Letter::new(pres.gen("u")), primitive(u))
        .with(Letter::new(pres.gen("zeta")), primitive(zeta))
        .with(Letter::new(pres.gen("v")), primitive(v).add(&pure(zeta, u)))
}

pub fn delta(p: &NCPolynomial, pres: &Presentation, conv: Convention) -> Result<TensorPolynomial> {
    let m = coproduct_map(pres, conv);
    apply_map(&m, &mut TensorAlgebra::new(pres, 2), p)
}

/// Every defining relation of `D` (and the unit relations for `g`) must map
/// to zero under `Δ`.
pub fn check_coproduct_on_relations(pres: &Presentation, conv: Convention) -> MapReport {
    let m = coproduct_map(pres, conv);
    check_map_is_morphism(&m, pres, &mut TensorAlgebra::new(pres, 2))
}

/// The conventions that pass the relation check.
pub fn elect_convention(pres: &Presentation) -> Vec<Convention> {
    Convention::ALL
        .into_iter()
        .filter(|c| check_coproduct_on_relations(pres, *c).passed())
        .collect()
}

pub fn counit_map(pres: &Presentation) -> AlgebraMap<Rational> {
    let mut m = AlgebraMap::new("counit", pres);
    for l in pres.letters() {
        let v = if pres.names()[l.index()] == "g" {
            Rational::one()
        } else {
            Rational::zero()
        };
        m.set(l, v);
    }
    m
}

pub fn counit(p: &NCPolynomial, pres: &Presentation) -> Result<Rational> {
    apply_map(&counit_map(pres), &mut Scalars, p)
}

fn counit_monomial(m: &Monomial, pres: &Presentation) -> Result<Rational> {
    counit(&NCPolynomial::monomial(*m), pres)
}

/// `(ε⊗id)Δ`, `(id⊗ε)Δ` and `(Δ⊗id)Δ = (id⊗Δ)Δ` on every letter.
pub fn counit_and_coassoc_axioms(pres: &Presentation, conv: Convention) -> ValidationReport {
    let mut report = ValidationReport::default();
    let dmap = coproduct_map(pres, conv);
    let red = Reducer::new(pres);
    for l in pres.letters() {
        let name = pres.letter_name(l);
        let res: Result<(bool, bool, TensorPolynomial)> = (|| {
            let d = dmap.image(l)?.clone();
            let mut left = NCPolynomial::zero();
            let mut right = NCPolynomial::zero();
            let mut t3_left = TensorPolynomial::zero();
            let mut t3_right = TensorPolynomial::zero();
            let mut t2 = TensorAlgebra::new(pres, 2);
            for (slots, c) in d.terms() {
                let (a, b) = (slots[0], slots[1]);
                left.add_term(b, c * &counit_monomial(&a, pres)?);
                right.add_term(a, c * &counit_monomial(&b, pres)?);
                let da = apply_map(&dmap, &mut t2, &NCPolynomial::monomial(a))?;
                for (s, e) in da.terms() {
                    t3_left.add_term(vec![s[0], s[1], b], c * e);
                }
                let db = apply_map(&dmap, &mut t2, &NCPolynomial::monomial(b))?;
                for (s, e) in db.terms() {
                    t3_right.add_term(vec![a, s[0], s[1]], c * e);
                }
            }
            let id = red.letter(l);
            let diff = t3_left.add(&t3_right.scale(&-Rational::one()));
            Ok((left == id, right == id, diff))
        })();
        match res {
            Ok((l_ok, r_ok, diff)) => {
                report.entries.push(ValidationEntry {
                    item: format!("(ε⊗id)Δ({name})"),
                    ok: l_ok,
                    detail: if l_ok {
                        name.clone()
                    } else {
                        "mismatch".into()
                    },
                });
                report.entries.push(ValidationEntry {
                    item: format!("(id⊗ε)Δ({name})"),
                    ok: r_ok,
                    detail: if r_ok {
                        name.clone()
                    } else {
                        "mismatch".into()
                    },
                });
                report.entries.push(ValidationEntry {
                    item: format!("coassociativity at {name}"),
                    ok: diff.is_zero(),
                    detail: diff.display(pres.names()).to_string(),
                });
            }
            Err(e) => report.entries.push(ValidationEntry {
                item: format!("axioms at {name}"),
                ok: false,
                detail: e.to_string(),
            }),
        }
    }
    report
}

/// `Δ(x), Δ(u), Δ(g^±1)` lie in `OG ⊗ OG`.
pub fn og_closure(pres: &Presentation, conv: Convention) -> ValidationReport {
    let mut report = ValidationReport::default();
    let dmap = coproduct_map(pres, conv);
    let og: Vec<usize> = ["g", "x", "u"].iter().map(|n| pres.gen(n)).collect();
    let in_og = |m: &Monomial| (0..pres.len()).all(|i| og.contains(&i) || m.exponent(i) == 0);
    for l in [
        Letter::new(pres.gen("x")),
        Letter::new(pres.gen("u")),
        Letter::new(pres.gen("g")),
        Letter::inv(pres.gen("g")),
    ] {
        let d = dmap.image(l).expect("coproduct defined on every letter");
        let ok = d.terms().all(|(s, _)| s.iter().all(in_og));
        report.entries.push(ValidationEntry {
            item: format!("Δ({})", pres.letter_name(l)),
            ok,
            detail: d.display(pres.names()).to_string(),
        });
    }
    report
}

/// `Δ(c) - c⊗c` for the central elements, computed but not judged.
pub fn central_coproduct_residuals(
    entry: &CatalogEntry,
    conv: Convention,
) -> Result<Vec<(String, TensorPolynomial)>> {
    let pres = &entry.presentation;
    let mut out = Vec::new();
    for name in ["z", "omega", "theta"] {
        let c = entry.element(name);
        let d = delta(c, pres, conv)?;
        let cc = TensorPolynomial::product(c, c);
        out.push((name.to_string(), d.add(&cc.scale(&-Rational::one()))));
    }
    Ok(out)
}
