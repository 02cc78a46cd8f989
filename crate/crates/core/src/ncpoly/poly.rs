use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::monomial::{Letter, Monomial};
use crate::rational::Rational;

/// A linear combination of PBW monomials with exact coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NCPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl NCPolynomial {
    pub fn zero() -> Self {
        NCPolynomial::default()
    }

    pub fn one() -> Self {
        NCPolynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        NCPolynomial::term(c, Monomial::identity())
    }

    pub fn monomial(m: Monomial) -> Self {
        NCPolynomial::term(Rational::one(), m)
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = NCPolynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = NCPolynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The scalar value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_identity().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NCPolynomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, d) in &other.terms {
            self.add_term(*m, d * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> NCPolynomial {
        if c.is_zero() {
            return NCPolynomial::zero();
        }
        NCPolynomial {
            terms: self.terms.iter().map(|(m, d)| (*m, d * c)).collect(),
        }
    }

    pub fn add(&self, other: &NCPolynomial) -> NCPolynomial {
        let mut p = self.clone();
        p.add_scaled(other, &Rational::one());
        p
    }

    pub fn sub(&self, other: &NCPolynomial) -> NCPolynomial {
        let mut p = self.clone();
        p.add_scaled(other, &-Rational::one());
        p
    }

    pub fn neg(&self) -> NCPolynomial {
        self.scale(&-Rational::one())
    }

    /// Largest total degree (absolute exponents) among the terms.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Terms sorted for printing: higher total degree first, and within a
    /// degree the monomial with the larger exponent on the later generator
    /// first.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| print_order(a, b));
        v
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

/// Graded order used for printing and for deterministic column layouts.
pub fn print_order(a: &Monomial, b: &Monomial) -> Ordering {
    b.total_degree().cmp(&a.total_degree()).then_with(|| {
        let ea = a.exponents();
        let eb = b.exponents();
        for i in (0..ea.len()).rev() {
            match eb[i].cmp(&ea[i]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

impl fmt::Debug for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a NCPolynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.poly.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_identity() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", m.display(self.names))?;
            } else {
                write!(f, "{mag}*{}", m.display(self.names))?;
            }
        }
        Ok(())
    }
}

/// A word in the generators: `(generator, exponent)` factors read left to
/// right, not necessarily in PBW order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<(usize, i32)>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![(l.index(), if l.inverse { -1 } else { 1 })])
    }

    /// Expand into single letters.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for &(g, e) in &self.0 {
            let l = if e >= 0 {
                Letter::new(g)
            } else {
                Letter::inv(g)
            };
            out.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
        }
        out
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        let mut w: Vec<(usize, i32)> = Vec::new();
        for l in letters {
            let step = if l.inverse { -1 } else { 1 };
            match w.last_mut() {
                Some((g, e)) if *g == l.index() => *e += step,
                _ => w.push((l.index(), step)),
            }
        }
        w.retain(|&(_, e)| e != 0);
        Word(w)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters();
        letters.extend(other.letters());
        Word::from_letters(&letters)
    }
}

/// An element of the free algebra: coefficients on arbitrary words. This is
/// the input to normal-form reduction and the storage for rule right-hand
/// sides.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FreePolynomial {
    pub terms: Vec<(Rational, Word)>,
}

impl FreePolynomial {
    pub fn zero() -> Self {
        FreePolynomial::default()
    }

    pub fn one() -> Self {
        FreePolynomial::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        FreePolynomial {
            terms: vec![(Rational::one(), w)],
        }
    }

    pub fn constant(c: Rational) -> Self {
        FreePolynomial {
            terms: vec![(c, Word::empty())],
        }
    }

    pub fn add(&self, other: &FreePolynomial) -> FreePolynomial {
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        out.collect()
    }

    pub fn scale(&self, c: &Rational) -> FreePolynomial {
        FreePolynomial {
            terms: self.terms.iter().map(|(d, w)| (d * c, w.clone())).collect(),
        }
        .collect()
    }

    pub fn mul(&self, other: &FreePolynomial) -> FreePolynomial {
        let mut terms = Vec::new();
        for (a, wa) in &self.terms {
            for (b, wb) in &other.terms {
                terms.push((a * b, wa.concat(wb)));
            }
        }
        FreePolynomial { terms }.collect()
    }

    /// Merge equal words and drop zero coefficients, keeping first-seen order.
    pub fn collect(self) -> FreePolynomial {
        let mut out: Vec<(Rational, Word)> = Vec::new();
        for (c, w) in self.terms {
            match out.iter_mut().find(|(_, v)| *v == w) {
                Some((d, _)) => *d += &c,
                None => out.push((c, w)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        FreePolynomial { terms: out }
    }

    pub fn from_monomials(p: &NCPolynomial) -> FreePolynomial {
        FreePolynomial {
            terms: p
                .terms()
                .map(|(m, c)| {
                    (
                        c.clone(),
                        Word::from_letters(&m.letters().collect::<Vec<_>>()),
                    )
                })
                .collect(),
        }
    }
}
