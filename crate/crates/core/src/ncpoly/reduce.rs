//! Normal-form rewriting onto the PBW basis.
//!
//! Products are computed by pushing letters into normal monomials from the
//! left. When a letter meets a smaller generator the swap rule for that pair
//! is applied, and the right-hand side is pushed into the remainder of the
//! monomial recursively. Results for `(letter, monomial)` pairs are memoized
//! for the lifetime of a [`Reducer`].

use std::collections::{BTreeMap, HashMap, HashSet};

use num_traits::One;

use super::monomial::{Letter, Monomial};
use super::poly::{FreePolynomial, NCPolynomial, Word};
use super::presentation::Presentation;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::expr::{self, canonical_name, ExprTarget};
use crate::rational::Rational;

/// Recursion depth at which a computation is declared non-terminating.
const MAX_DEPTH: usize = 1_500;

/// Scratch state for normal-form computations over one presentation.
pub struct Reducer<'p> {
    pres: &'p Presentation,
    letter_cache: HashMap<(Letter, Monomial), NCPolynomial>,
    pair_cache: HashMap<(Monomial, Monomial), NCPolynomial>,
    in_progress: HashSet<(Letter, Monomial)>,
    symbols: BTreeMap<String, NCPolynomial>,
    steps: u64,
    depth: usize,
}

impl<'p> Reducer<'p> {
    pub fn new(pres: &'p Presentation) -> Self {
        Reducer {
            pres,
            letter_cache: HashMap::new(),
            pair_cache: HashMap::new(),
            in_progress: HashSet::new(),
            symbols: BTreeMap::new(),
            steps: 0,
            depth: 0,
        }
    }

    /// Named elements (such as `q`, `s`, `z`) usable in parsed expressions.
    pub fn with_symbols(mut self, symbols: BTreeMap<String, NCPolynomial>) -> Self {
        self.symbols = symbols;
        self
    }

    /// Parse and normalize an expression.
    pub fn parse(&mut self, text: &str) -> Result<NCPolynomial> {
        let e = expr::parse_expr(text)?;
        expr::evaluate(self, &e)
    }

    pub fn presentation(&self) -> &'p Presentation {
        self.pres
    }

    fn exhausted(&self) -> Error {
        Error::NonTerminating {
            algebra: self.pres.name().to_string(),
            budget: self.pres.step_budget(),
        }
    }

    fn check_letter(&self, l: Letter) -> Result<()> {
        if l.index() >= self.pres.len() {
            return Err(Error::UnknownGenerator(format!("#{}", l.index())));
        }
        if l.inverse && !self.pres.generators()[l.index()].invertible {
            return Err(Error::NegativeExponentOnNonInvertible(
                self.pres.names()[l.index()].clone(),
            ));
        }
        Ok(())
    }

    /// Normal form of `letter * m` for a normal monomial `m`.
    pub fn letter_times_monomial(&mut self, l: Letter, m: &Monomial) -> Result<NCPolynomial> {
        self.check_letter(l)?;
        let names = self.pres.names();
        let first = match m.first_generator() {
            None => {
                return Ok(NCPolynomial::monomial(
                    Monomial::identity().push_front(l, names)?,
                ))
            }
            Some(j) => j,
        };
        if l.index() <= first {
            return Ok(NCPolynomial::monomial(m.push_front(l, names)?));
        }
        let key = (l, *m);
        if let Some(p) = self.letter_cache.get(&key) {
            return Ok(p.clone());
        }
        if !self.in_progress.insert(key) || self.depth >= MAX_DEPTH {
            return Err(self.exhausted());
        }
        self.steps += 1;
        if self.steps > self.pres.step_budget() {
            return Err(self.exhausted());
        }
        self.depth += 1;
        let result = self.swap_into(l, m);
        self.depth -= 1;
        self.in_progress.remove(&key);
        let result = result?;
        self.letter_cache.insert(key, result.clone());
        Ok(result)
    }

    fn swap_into(&mut self, l: Letter, m: &Monomial) -> Result<NCPolynomial> {
        let (f, rest) = m.split_first().expect("non-identity monomial");
        let rhs = self
            .pres
            .rule(l, f)
            .ok_or_else(|| Error::ValidationFailed {
                algebra: self.pres.name().to_string(),
                details: format!(
                    "no rule for {}*{}",
                    self.pres.letter_name(l),
                    self.pres.letter_name(f)
                ),
            })?
            .clone();
        let mut out = NCPolynomial::zero();
        for (c, w) in &rhs.terms {
            let p = self.word_times_monomial(w, &rest)?;
            out.add_scaled(&p, c);
        }
        Ok(out)
    }

    fn word_times_monomial(&mut self, w: &Word, m: &Monomial) -> Result<NCPolynomial> {
        let mut acc = NCPolynomial::monomial(*m);
        for l in w.letters().into_iter().rev() {
            acc = self.letter_times(l, &acc)?;
        }
        Ok(acc)
    }

    /// Normal form of `letter * p`.
    pub fn letter_times(&mut self, l: Letter, p: &NCPolynomial) -> Result<NCPolynomial> {
        let mut out = NCPolynomial::zero();
        for (m, c) in p.terms() {
            let q = self.letter_times_monomial(l, m)?;
            out.add_scaled(&q, c);
        }
        Ok(out)
    }

    pub fn monomial_product(&mut self, a: &Monomial, b: &Monomial) -> Result<NCPolynomial> {
        match (a.last_generator(), b.first_generator()) {
            (None, _) => return Ok(NCPolynomial::monomial(*b)),
            (_, None) => return Ok(NCPolynomial::monomial(*a)),
            (Some(i), Some(j)) if i <= j => {
                let merged = a.concat(b, self.pres.names())?;
                return Ok(NCPolynomial::monomial(merged));
            }
            _ => {}
        }
        if let Some(p) = self.pair_cache.get(&(*a, *b)) {
            return Ok(p.clone());
        }
        let mut acc = NCPolynomial::monomial(*b);
        let letters: Vec<Letter> = a.letters().collect();
        for l in letters.into_iter().rev() {
            acc = self.letter_times(l, &acc)?;
        }
        self.pair_cache.insert((*a, *b), acc.clone());
        Ok(acc)
    }

    /// Normal form of the product of two normal-form polynomials.
    pub fn multiply(&mut self, a: &NCPolynomial, b: &NCPolynomial) -> Result<NCPolynomial> {
        self.steps = 0;
        let mut out = NCPolynomial::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let p = self.monomial_product(ma, mb)?;
                out.add_scaled(&p, &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn commutator(&mut self, a: &NCPolynomial, b: &NCPolynomial) -> Result<NCPolynomial> {
        let ab = self.multiply(a, b)?;
        let ba = self.multiply(b, a)?;
        Ok(ab.sub(&ba))
    }

    /// Normal form of a word `(generator, exponent)*`.
    pub fn word(&mut self, w: &Word) -> Result<NCPolynomial> {
        self.steps = 0;
        let letters = w.letters();
        for l in &letters {
            self.check_letter(*l)?;
        }
        let mut acc = NCPolynomial::one();
        for l in letters.into_iter().rev() {
            acc = self.letter_times(l, &acc)?;
        }
        Ok(acc)
    }

    pub fn normal_form(&mut self, p: &FreePolynomial) -> Result<NCPolynomial> {
        let mut out = NCPolynomial::zero();
        for (c, w) in &p.terms {
            let q = self.word(w)?;
            out.add_scaled(&q, c);
        }
        Ok(out)
    }

    /// `g` as a normal-form polynomial.
    pub fn generator(&self, name: &str) -> NCPolynomial {
        NCPolynomial::monomial(Monomial::generator(self.pres.gen(name), 1))
    }

    pub fn letter(&self, l: Letter) -> NCPolynomial {
        NCPolynomial::monomial(Monomial::generator(
            l.index(),
            if l.inverse { -1 } else { 1 },
        ))
    }
}

impl Algebra for Reducer<'_> {
    type Elem = NCPolynomial;

    fn zero(&self) -> NCPolynomial {
        NCPolynomial::zero()
    }
    fn one(&self) -> NCPolynomial {
        NCPolynomial::one()
    }
    fn add(&self, a: &NCPolynomial, b: &NCPolynomial) -> NCPolynomial {
        a.add(b)
    }
    fn scale(&self, a: &NCPolynomial, c: &Rational) -> NCPolynomial {
        a.scale(c)
    }
    fn mul(&mut self, a: &NCPolynomial, b: &NCPolynomial) -> Result<NCPolynomial> {
        self.multiply(a, b)
    }
    fn is_zero(&self, a: &NCPolynomial) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &NCPolynomial) -> String {
        a.display(self.pres.names()).to_string()
    }
}

impl ExprTarget for Reducer<'_> {
    fn symbol(&mut self, name: &str) -> Result<NCPolynomial> {
        if let Some(g) = self.pres.index_of(name) {
            return Ok(NCPolynomial::monomial(Monomial::generator(g, 1)));
        }
        self.symbols
            .get(canonical_name(name))
            .cloned()
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    fn inverse(&mut self, a: &NCPolynomial, shown: &str) -> Result<NCPolynomial> {
        let mut terms = a.terms();
        if let (Some((m, c)), None) = (terms.next(), terms.next()) {
            if m.letters()
                .all(|l| self.pres.generators()[l.index()].invertible)
            {
                let w = Word::from_letters(&m.inverse_letters());
                return Ok(self.word(&w)?.scale(&c.recip()));
            }
        }
        Err(Error::NegativePowerNotInvertible(shown.to_string()))
    }
}

/// Normal form of a free-algebra element.
pub fn normal_form(word: &FreePolynomial, pres: &Presentation) -> Result<NCPolynomial> {
    Reducer::new(pres).normal_form(word)
}

pub fn multiply(a: &NCPolynomial, b: &NCPolynomial, pres: &Presentation) -> Result<NCPolynomial> {
    Reducer::new(pres).multiply(a, b)
}

pub fn commutator(a: &NCPolynomial, b: &NCPolynomial, pres: &Presentation) -> Result<NCPolynomial> {
    Reducer::new(pres).commutator(a, b)
}

/// Largest total exponent of level generators over the terms of `p`.
pub fn level_degree(p: &NCPolynomial, pres: &Presentation) -> Result<u32> {
    p.monomials()
        .map(|m| pres.monomial_level(m))
        .max()
        .ok_or(Error::ZeroPolynomial)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationEntry {
    pub item: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub entries: Vec<ValidationEntry>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ValidationEntry> {
        self.entries.iter().filter(|e| !e.ok)
    }

    pub fn push(&mut self, item: String, ok: bool, detail: String) {
        self.entries.push(ValidationEntry { item, ok, detail });
    }
}

/// Check rule completeness, the level certificate of every rule, inverse-rule
/// round trips and `t * t^-1 = t^-1 * t = 1`.
pub fn validate_presentation(pres: &Presentation) -> ValidationReport {
    let mut report = ValidationReport::default();
    let letters = pres.letters();
    for &l in &letters {
        for &r in &letters {
            if l.gen > r.gen {
                let ok = pres.rule(l, r).is_some();
                let name = format!("{}*{}", pres.letter_name(l), pres.letter_name(r));
                report.push(
                    format!("rule {name}"),
                    ok,
                    if ok {
                        "present".into()
                    } else {
                        "missing".into()
                    },
                );
            }
        }
    }
    let certify = |report: &mut ValidationReport, l: Letter, r: Letter, rhs: &FreePolynomial| {
        let name = format!("{}*{}", pres.letter_name(l), pres.letter_name(r));
        let swapped = Word::from_letters(&[r, l]);
        let lead_ok = rhs.terms.iter().any(|(c, w)| *w == swapped && c.is_one());
        let top = pres.word_level(&Word::from_letters(&[l, r]));
        let offending: Vec<String> = rhs
            .terms
            .iter()
            .filter(|(_, w)| *w != swapped && pres.word_level(w) >= top)
            .map(|(_, w)| format!("{w:?}"))
            .collect();
        let ok = lead_ok && offending.is_empty();
        let detail = if !lead_ok {
            "right side lacks the swapped pair with coefficient 1".to_string()
        } else if !offending.is_empty() {
            format!(
                "remainder words not of lower level: {}",
                offending.join(", ")
            )
        } else {
            "ok".into()
        };
        report.push(format!("certificate {name}"), ok, detail);
    };
    for r in pres.swap_rules() {
        certify(&mut report, Letter::new(r.hi), Letter::new(r.lo), &r.rhs);
    }
    for r in pres.inverse_rules() {
        certify(&mut report, r.left, r.right, &r.rhs);
    }
    if !report.passed() {
        // Reduction may not terminate on uncertified rules.
        return report;
    }
    let mut red = Reducer::new(pres);
    for r in pres.inverse_rules() {
        let name = format!("{}*{}", pres.letter_name(r.left), pres.letter_name(r.right));
        // Cancel the inverted letters against the right side.
        let expect: Vec<Letter> = [r.left, r.right]
            .into_iter()
            .filter(|l| !l.inverse)
            .collect();
        let lhs = red.normal_form(&r.rhs).and_then(|rhs| {
            let left = if r.left.inverse {
                red.letter(r.left.inverted())
            } else {
                NCPolynomial::one()
            };
            let right = if r.right.inverse {
                red.letter(r.right.inverted())
            } else {
                NCPolynomial::one()
            };
            let t = red.multiply(&left, &rhs)?;
            red.multiply(&t, &right)
        });
        let want = red.word(&Word::from_letters(&expect));
        let (ok, detail) = match (lhs, want) {
            (Ok(a), Ok(b)) if a == b => (true, "ok".to_string()),
            (Ok(a), Ok(b)) => (
                false,
                format!(
                    "round trip gives {} instead of {}",
                    a.display(pres.names()),
                    b.display(pres.names())
                ),
            ),
            (Err(e), _) | (_, Err(e)) => (false, e.to_string()),
        };
        report.push(format!("round trip {name}"), ok, detail);
    }
    for g in pres.generators().iter().filter(|g| g.invertible) {
        let t = Letter::new(g.position);
        for word in [[t, t.inverted()], [t.inverted(), t]] {
            let res = red.word(&Word(
                word.iter()
                    .map(|l| (l.index(), if l.inverse { -1 } else { 1 }))
                    .collect(),
            ));
            let ok = matches!(&res, Ok(p) if *p == NCPolynomial::one());
            report.push(
                format!(
                    "inverse pair {}*{}",
                    pres.letter_name(word[0]),
                    pres.letter_name(word[1])
                ),
                ok,
                if ok { "ok".into() } else { format!("{res:?}") },
            );
        }
    }
    report
}
