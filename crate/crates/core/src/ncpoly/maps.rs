//! Algebra maps out of a presentation, and the normality and centrality
//! tests built on them.

use super::monomial::Letter;
use super::poly::{FreePolynomial, NCPolynomial};
use super::presentation::Presentation;
use super::reduce::{Reducer, ValidationReport};
use crate::algebra::Algebra;
use crate::error::{Error, Result};

/// Images of the letters of a source presentation in some target algebra.
#[derive(Clone, Debug)]
pub struct AlgebraMap<E> {
    pub name: String,
    images: Vec<Option<E>>,
    inverse_images: Vec<Option<E>>,
    source_names: Vec<String>,
}

pub type MapReport = ValidationReport;

/// A generator on which a property fails, with the nonzero residual.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub letter: String,
    pub residual: NCPolynomial,
}

impl<E: Clone> AlgebraMap<E> {
    pub fn new(name: &str, source: &Presentation) -> Self {
        AlgebraMap {
            name: name.to_string(),
            images: vec![None; source.len()],
            inverse_images: vec![None; source.len()],
            source_names: source.names().to_vec(),
        }
    }

    pub fn set(&mut self, l: Letter, image: E) {
        if l.inverse {
            self.inverse_images[l.index()] = Some(image);
        } else {
            self.images[l.index()] = Some(image);
        }
    }

    pub fn with(mut self, l: Letter, image: E) -> Self {
        self.set(l, image);
        self
    }

    pub fn image(&self, l: Letter) -> Result<&E> {
        let slot = if l.inverse {
            &self.inverse_images[l.index()]
        } else {
            &self.images[l.index()]
        };
        slot.as_ref().ok_or_else(|| {
            let name = &self.source_names[l.index()];
            if l.inverse {
                Error::MissingInverseImage(name.clone())
            } else {
                Error::MissingInverseImage(format!("{name} (forward image)"))
            }
        })
    }
}

impl AlgebraMap<NCPolynomial> {
    /// The identity endomorphism, with images for every letter.
    pub fn identity(pres: &Presentation) -> Self {
        let mut m = AlgebraMap::new("id", pres);
        for l in pres.letters() {
            m.set(l, Reducer::new(pres).letter(l));
        }
        m
    }

    /// Compose `self` after `first`, both endomorphisms of `pres`.
    pub fn compose(&self, first: &AlgebraMap<NCPolynomial>, pres: &Presentation) -> Result<Self> {
        let mut red = Reducer::new(pres);
        let mut m = AlgebraMap::new(&format!("{}∘{}", self.name, first.name), pres);
        for l in pres.letters() {
            let img = apply_map(self, &mut red, first.image(l)?)?;
            m.set(l, img);
        }
        Ok(m)
    }
}

/// Image of a normal-form polynomial under `m`, computed in `target`.
pub fn apply_map<A: Algebra>(
    m: &AlgebraMap<A::Elem>,
    target: &mut A,
    p: &NCPolynomial,
) -> Result<A::Elem> {
    let mut out = target.zero();
    for (mono, c) in p.terms() {
        let mut acc = target.one();
        for l in mono.letters() {
            acc = target.mul(&acc, m.image(l)?)?;
        }
        out = target.add(&out, &target.scale(&acc, c));
    }
    Ok(out)
}

fn apply_free<A: Algebra>(
    m: &AlgebraMap<A::Elem>,
    target: &mut A,
    p: &FreePolynomial,
) -> Result<A::Elem> {
    let mut out = target.zero();
    for (c, w) in &p.terms {
        let mut acc = target.one();
        for l in w.letters() {
            acc = target.mul(&acc, m.image(l)?)?;
        }
        out = target.add(&out, &target.scale(&acc, c));
    }
    Ok(out)
}

/// Check that every defining relation of `source`, including the inverse
/// rules and `t * t^-1 = t^-1 * t = 1`, maps to zero.
pub fn check_map_is_morphism<A: Algebra>(
    m: &AlgebraMap<A::Elem>,
    source: &Presentation,
    target: &mut A,
) -> MapReport {
    let mut report = MapReport::default();
    let mut relation =
        |target: &mut A, item: String, l: Letter, r: Letter, rhs: &FreePolynomial| {
            let res = (|| {
                let lhs = target.mul(m.image(l)?, m.image(r)?)?;
                let rhs = apply_free(m, target, rhs)?;
                Ok::<_, Error>(target.sub(&lhs, &rhs))
            })();
            let (ok, detail) = match res {
                Ok(d) if target.is_zero(&d) => (true, "0".to_string()),
                Ok(d) => (false, target.render(&d)),
                Err(e) => (false, e.to_string()),
            };
            report
                .entries
                .push(super::reduce::ValidationEntry { item, ok, detail });
        };
    for r in source.swap_rules() {
        let (l, rt) = (Letter::new(r.hi), Letter::new(r.lo));
        let item = format!("{}*{}", source.letter_name(l), source.letter_name(rt));
        relation(target, item, l, rt, &r.rhs);
    }
    for r in source.inverse_rules() {
        let item = format!(
            "{}*{}",
            source.letter_name(r.left),
            source.letter_name(r.right)
        );
        relation(target, item, r.left, r.right, &r.rhs);
    }
    for g in source.generators().iter().filter(|g| g.invertible) {
        let t = Letter::new(g.position);
        let one = FreePolynomial::one();
        let item = format!(
            "{}*{}",
            source.letter_name(t),
            source.letter_name(t.inverted())
        );
        relation(target, item, t, t.inverted(), &one);
        let item = format!(
            "{}*{}",
            source.letter_name(t.inverted()),
            source.letter_name(t)
        );
        relation(target, item, t.inverted(), t, &one);
    }
    report
}

/// `None` when `c` commutes with every letter, otherwise the first letter
/// with a nonzero bracket.
pub fn is_central(c: &NCPolynomial, pres: &Presentation) -> Result<Option<Witness>> {
    let mut red = Reducer::new(pres);
    for l in pres.letters() {
        let b = red.commutator(c, &red.letter(l))?;
        if !b.is_zero() {
            return Ok(Some(Witness {
                letter: pres.letter_name(l),
                residual: b,
            }));
        }
    }
    Ok(None)
}

/// `None` when `n * t = m(t) * n` for every letter `t`, otherwise a witness.
pub fn is_sigma_normal(
    n: &NCPolynomial,
    m: &AlgebraMap<NCPolynomial>,
    pres: &Presentation,
) -> Result<Option<Witness>> {
    let mut red = Reducer::new(pres);
    for l in pres.letters() {
        let left = red.multiply(n, &red.letter(l))?;
        let right = red.multiply(m.image(l)?, n)?;
        let d = left.sub(&right);
        if !d.is_zero() {
            return Ok(Some(Witness {
                letter: pres.letter_name(l),
                residual: d,
            }));
        }
    }
    Ok(None)
}

impl Witness {
    pub fn describe(&self, pres: &Presentation) -> String {
        format!("{}: {}", self.letter, self.residual.display(pres.names()))
    }
}
