use std::collections::HashSet;

use num_traits::One;

use super::monomial::{Letter, Monomial, MAX_GENERATORS};
use super::poly::{FreePolynomial, Word};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::expr::{self, canonical_name, Expr, ExprTarget};
use crate::rational::Rational;

/// Default cap on elementary rewrite steps per top-level operation.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorInfo {
    pub name: String,
    pub position: usize,
    pub invertible: bool,
}

/// `hi * lo = rhs` for a pair of generators with `hi` after `lo`.
#[derive(Clone, Debug, PartialEq)]
pub struct SwapRule {
    pub hi: usize,
    pub lo: usize,
    pub rhs: FreePolynomial,
}

/// `left * right = rhs` for an out-of-order pair of letters where at least
/// one letter is an inverse, e.g. `y * g^-1 = g^-1*y + g^-1*x`.
#[derive(Clone, Debug, PartialEq)]
pub struct InverseSwapRule {
    pub left: Letter,
    pub right: Letter,
    pub rhs: FreePolynomial,
}

#[derive(Clone, Copy, Debug)]
enum RuleSlot {
    Swap(usize),
    Inverse(usize),
}

/// A finite rewriting presentation: ordered generators, one rule per
/// out-of-order pair of letters, and the generators that carry level degree.
#[derive(Clone, Debug)]
pub struct Presentation {
    name: String,
    generators: Vec<GeneratorInfo>,
    names: Vec<String>,
    level: Vec<bool>,
    swap_rules: Vec<SwapRule>,
    inverse_rules: Vec<InverseSwapRule>,
    table: Vec<Option<RuleSlot>>,
    step_budget: u64,
}

const CODES: usize = 2 * MAX_GENERATORS;

impl Presentation {
    pub fn new(
        name: &str,
        generators: Vec<(String, bool)>,
        level_generators: &[usize],
        swap_rules: Vec<SwapRule>,
        inverse_rules: Vec<InverseSwapRule>,
    ) -> Result<Self> {
        let bad = |msg: String| Error::ValidationFailed {
            algebra: name.to_string(),
            details: msg,
        };
        if generators.len() > MAX_GENERATORS {
            return Err(Error::TooManyGenerators(generators.len()));
        }
        let mut seen = HashSet::new();
        for (n, _) in &generators {
            if !seen.insert(n.clone()) {
                return Err(bad(format!("duplicate generator `{n}`")));
            }
        }
        let generators: Vec<GeneratorInfo> = generators
            .into_iter()
            .enumerate()
            .map(|(position, (name, invertible))| GeneratorInfo {
                name,
                position,
                invertible,
            })
            .collect();
        let names = generators.iter().map(|g| g.name.clone()).collect();
        let mut level = vec![false; generators.len()];
        for &g in level_generators {
            if g >= generators.len() {
                return Err(bad(format!("level generator index {g} out of range")));
            }
            if generators[g].invertible {
                return Err(bad(format!(
                    "level generator `{}` may not be invertible",
                    generators[g].name
                )));
            }
            level[g] = true;
        }
        let mut table = vec![None; CODES * CODES];
        for (i, r) in swap_rules.iter().enumerate() {
            if r.hi >= generators.len() || r.lo >= generators.len() || r.hi <= r.lo {
                return Err(bad(format!("swap rule {i} is not an out-of-order pair")));
            }
            let slot = &mut table[Letter::new(r.hi).code() * CODES + Letter::new(r.lo).code()];
            if slot.is_some() {
                return Err(bad(format!(
                    "two rules for {}*{}",
                    generators[r.hi].name, generators[r.lo].name
                )));
            }
            *slot = Some(RuleSlot::Swap(i));
        }
        for (i, r) in inverse_rules.iter().enumerate() {
            let (l, rt) = (r.left, r.right);
            if l.index() >= generators.len() || rt.index() >= generators.len() || l.gen <= rt.gen {
                return Err(bad(format!("inverse rule {i} is not an out-of-order pair")));
            }
            if !(l.inverse || rt.inverse) {
                return Err(bad(format!("inverse rule {i} has no inverted letter")));
            }
            for letter in [l, rt] {
                if letter.inverse && !generators[letter.index()].invertible {
                    return Err(Error::NegativeExponentOnNonInvertible(
                        generators[letter.index()].name.clone(),
                    ));
                }
            }
            let slot = &mut table[l.code() * CODES + rt.code()];
            if slot.is_some() {
                return Err(bad(format!("two rules for letter pair {i}")));
            }
            *slot = Some(RuleSlot::Inverse(i));
        }
        Ok(Presentation {
            name: name.to_string(),
            generators,
            names,
            level,
            swap_rules,
            inverse_rules,
            table,
            step_budget: DEFAULT_STEP_BUDGET,
        })
    }

    pub fn with_step_budget(mut self, budget: u64) -> Self {
        self.step_budget = budget;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[GeneratorInfo] {
        &self.generators
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn step_budget(&self) -> u64 {
        self.step_budget
    }

    pub fn swap_rules(&self) -> &[SwapRule] {
        &self.swap_rules
    }

    pub fn inverse_rules(&self) -> &[InverseSwapRule] {
        &self.inverse_rules
    }

    pub fn is_level(&self, gen: usize) -> bool {
        self.level[gen]
    }

    pub fn level_generators(&self) -> Vec<usize> {
        (0..self.len()).filter(|&g| self.level[g]).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        let name = canonical_name(name);
        self.names.iter().position(|n| n == name)
    }

    pub fn gen(&self, name: &str) -> usize {
        self.index_of(name)
            .unwrap_or_else(|| panic!("no generator `{name}` in {}", self.name))
    }

    /// Every letter of the presentation: each generator, then each inverse.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out: Vec<Letter> = (0..self.len()).map(Letter::new).collect();
        out.extend(
            self.generators
                .iter()
                .filter(|g| g.invertible)
                .map(|g| Letter::inv(g.position)),
        );
        out
    }

    pub fn letter_name(&self, l: Letter) -> String {
        if l.inverse {
            format!("{}^-1", self.names[l.index()])
        } else {
            self.names[l.index()].clone()
        }
    }

    pub(crate) fn rule(&self, left: Letter, right: Letter) -> Option<&FreePolynomial> {
        match self.table[left.code() * CODES + right.code()]? {
            RuleSlot::Swap(i) => Some(&self.swap_rules[i].rhs),
            RuleSlot::Inverse(i) => Some(&self.inverse_rules[i].rhs),
        }
    }

    pub fn monomial_level(&self, m: &Monomial) -> u32 {
        (0..self.len())
            .filter(|&g| self.level[g])
            .map(|g| m.exponent(g).unsigned_abs() as u32)
            .sum()
    }

    pub fn word_level(&self, w: &Word) -> u32 {
        w.0.iter()
            .filter(|(g, _)| self.level[*g])
            .map(|(_, e)| e.unsigned_abs())
            .sum()
    }

    /// Parse an expression into the free algebra on this presentation's
    /// generators, without normalizing.
    pub fn parse_free(&self, text: &str) -> Result<FreePolynomial> {
        let e = expr::parse_expr(text)?;
        expr::evaluate(&mut FreeAlgebra { pres: self }, &e)
    }

    /// Parse the declarative presentation text format:
    ///
    /// ```text
    /// name: D
    /// generators: g*, x, u, y, zeta, v      # `*` marks invertible
    /// level: y, zeta, v
    /// y*x = x*y - 1/2*x^2                   # word rule
    /// [v,x] = 1 - g + x*u                   # bracket rule: v*x = x*v + rhs
    /// y*g^-1 = g^-1*y + g^-1*x              # inverse rule
    /// ```
    pub fn from_text(text: &str) -> Result<Self> {
        let mut name = None;
        let mut gens: Option<Vec<(String, bool)>> = None;
        let mut level_names: Vec<String> = Vec::new();
        let mut rule_lines = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let fmt_err = |msg: &str| Error::PresentationFormat {
                line: lineno + 1,
                msg: msg.to_string(),
            };
            if let Some((key, value)) = line.split_once(':') {
                let items = || {
                    value
                        .split(',')
                        .map(str::trim)
                        .filter(|s| !s.is_empty())
                        .map(String::from)
                };
                match key.trim() {
                    "name" => name = Some(value.trim().to_string()),
                    "generators" => {
                        gens = Some(
                            items()
                                .map(|s| match s.strip_suffix('*') {
                                    Some(base) => (canonical_name(base.trim()).to_string(), true),
                                    None => (canonical_name(&s).to_string(), false),
                                })
                                .collect(),
                        )
                    }
                    "level" => level_names = items().collect(),
                    other => return Err(fmt_err(&format!("unknown key `{other}`"))),
                }
                continue;
            }
            let (lhs, rhs) = line
                .split_once('=')
                .ok_or_else(|| fmt_err("expected `lhs = rhs`"))?;
            rule_lines.push((lineno + 1, lhs.trim().to_string(), rhs.trim().to_string()));
        }
        let name = name.unwrap_or_else(|| "unnamed".to_string());
        let gens = gens.ok_or(Error::PresentationFormat {
            line: 0,
            msg: "missing `generators:` line".into(),
        })?;
        // A rule-free shell for elaborating rule texts.
        let shell = Presentation::new(&name, gens.clone(), &[], vec![], vec![])?;
        let mut level = Vec::new();
        for l in &level_names {
            level.push(
                shell
                    .index_of(l)
                    .ok_or_else(|| Error::UnknownGenerator(l.clone()))?,
            );
        }
        let mut swaps = Vec::new();
        let mut inverses = Vec::new();
        for (line, lhs, rhs) in rule_lines {
            let fmt_err = |msg: String| Error::PresentationFormat { line, msg };
            let lhs_expr = expr::parse_expr(&lhs)?;
            let mut rhs = shell.parse_free(&rhs)?;
            let (left, right) = match &lhs_expr {
                Expr::Bracket(a, b) => {
                    let a = shell.single_letter(a).map_err(&fmt_err)?;
                    let b = shell.single_letter(b).map_err(&fmt_err)?;
                    let swapped = FreePolynomial::word(Word::from_letters(&[b, a]));
                    rhs = swapped.add(&rhs);
                    (a, b)
                }
                _ => {
                    let word = shell.parse_free(&lhs)?;
                    match word.terms.as_slice() {
                        [(c, w)] if c.is_one() => match w.letters().as_slice() {
                            [a, b] => (*a, *b),
                            _ => return Err(fmt_err("left side must be two letters".into())),
                        },
                        _ => return Err(fmt_err("left side must be a single word".into())),
                    }
                }
            };
            if left.gen <= right.gen {
                return Err(fmt_err(format!(
                    "left side {}*{} is already in order",
                    shell.letter_name(left),
                    shell.letter_name(right)
                )));
            }
            if left.inverse || right.inverse {
                inverses.push(InverseSwapRule { left, right, rhs });
            } else {
                swaps.push(SwapRule {
                    hi: left.index(),
                    lo: right.index(),
                    rhs,
                });
            }
        }
        Presentation::new(&name, gens, &level, swaps, inverses)
    }

    fn single_letter(&self, e: &Expr) -> std::result::Result<Letter, String> {
        let p = expr::evaluate(&mut FreeAlgebra { pres: self }, e).map_err(|e| e.to_string())?;
        match p.terms.as_slice() {
            [(c, w)] if c.is_one() => match w.letters().as_slice() {
                [l] => Ok(*l),
                _ => Err("bracket entries must be single letters".into()),
            },
            _ => Err("bracket entries must be single letters".into()),
        }
    }
}

/// The free algebra on a presentation's letters; used to read rule texts.
pub struct FreeAlgebra<'p> {
    pub pres: &'p Presentation,
}

impl Algebra for FreeAlgebra<'_> {
    type Elem = FreePolynomial;

    fn zero(&self) -> FreePolynomial {
        FreePolynomial::zero()
    }
    fn one(&self) -> FreePolynomial {
        FreePolynomial::one()
    }
    fn add(&self, a: &FreePolynomial, b: &FreePolynomial) -> FreePolynomial {
        a.add(b)
    }
    fn scale(&self, a: &FreePolynomial, c: &Rational) -> FreePolynomial {
        a.scale(c)
    }
    fn mul(&mut self, a: &FreePolynomial, b: &FreePolynomial) -> Result<FreePolynomial> {
        Ok(a.mul(b))
    }
    fn is_zero(&self, a: &FreePolynomial) -> bool {
        a.terms.is_empty()
    }
    fn render(&self, a: &FreePolynomial) -> String {
        format!("{a:?}")
    }
}

impl ExprTarget for FreeAlgebra<'_> {
    fn symbol(&mut self, name: &str) -> Result<FreePolynomial> {
        let g = self
            .pres
            .index_of(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        Ok(FreePolynomial::word(Word::letter(Letter::new(g))))
    }

    fn inverse(&mut self, a: &FreePolynomial, shown: &str) -> Result<FreePolynomial> {
        if let [(c, w)] = a.terms.as_slice() {
            let letters = w.letters();
            if letters
                .iter()
                .all(|l| self.pres.generators()[l.index()].invertible)
            {
                let inv: Vec<Letter> = letters.iter().rev().map(|l| l.inverted()).collect();
                return Ok(FreePolynomial {
                    terms: vec![(c.recip(), Word::from_letters(&inv))],
                });
            }
        }
        Err(Error::NegativePowerNotInvertible(shown.to_string()))
    }
}
