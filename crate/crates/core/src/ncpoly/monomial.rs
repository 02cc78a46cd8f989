use std::fmt;

use crate::error::{Error, Result};

/// Maximum number of generators a presentation may declare.
pub const MAX_GENERATORS: usize = 8;

/// One generator or its inverse, as it appears in a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: u8,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize) -> Self {
        Letter {
            gen: gen as u8,
            inverse: false,
        }
    }

    pub fn inv(gen: usize) -> Self {
        Letter {
            gen: gen as u8,
            inverse: true,
        }
    }

    pub fn index(self) -> usize {
        self.gen as usize
    }

    pub fn inverted(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    /// Dense code used for rule tables.
    pub(crate) fn code(self) -> usize {
        2 * self.gen as usize + self.inverse as usize
    }

    fn step(self) -> i16 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// Exponent vector of a PBW monomial `g0^e0 g1^e1 ...` in generator order.
///
/// Negative exponents are only meaningful on invertible generators; the
/// presentation enforces that.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial([i16; MAX_GENERATORS]);

impl Monomial {
    pub fn identity() -> Self {
        Monomial::default()
    }

    pub fn from_exponents(exps: &[i16]) -> Self {
        assert!(exps.len() <= MAX_GENERATORS);
        let mut m = [0; MAX_GENERATORS];
        m[..exps.len()].copy_from_slice(exps);
        Monomial(m)
    }

    pub fn generator(gen: usize, exp: i16) -> Self {
        let mut m = Monomial::identity();
        m.0[gen] = exp;
        m
    }

    pub fn exponent(&self, gen: usize) -> i16 {
        self.0[gen]
    }

    pub fn exponents(&self) -> &[i16; MAX_GENERATORS] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Sum of absolute exponents.
    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|e| e.unsigned_abs() as u32).sum()
    }

    pub(crate) fn first_generator(&self) -> Option<usize> {
        self.0.iter().position(|&e| e != 0)
    }

    pub(crate) fn last_generator(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e != 0)
    }

    /// Multiply by `letter` on the left, assuming no generator of `self`
    /// precedes the letter's generator.
    pub(crate) fn push_front(&self, letter: Letter, names: &[String]) -> Result<Self> {
        let mut m = *self;
        let e = &mut m.0[letter.index()];
        *e = e
            .checked_add(letter.step())
            .ok_or_else(|| Error::ExponentOverflow(names[letter.index()].clone()))?;
        Ok(m)
    }

    /// Strip one copy of the first letter: `self = first * rest`.
    pub(crate) fn split_first(&self) -> Option<(Letter, Monomial)> {
        let j = self.first_generator()?;
        let e = self.0[j];
        let letter = if e > 0 {
            Letter::new(j)
        } else {
            Letter::inv(j)
        };
        let mut rest = *self;
        rest.0[j] -= letter.step();
        Some((letter, rest))
    }

    /// Letters of the monomial from left to right.
    /// Letters of the formal inverse: reversed and each inverted.
    pub fn inverse_letters(&self) -> Vec<Letter> {
        let mut v: Vec<Letter> = self.letters().map(Letter::inverted).collect();
        v.reverse();
        v
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.0.iter().enumerate().flat_map(|(g, &e)| {
            let l = if e >= 0 {
                Letter::new(g)
            } else {
                Letter::inv(g)
            };
            std::iter::repeat_n(l, e.unsigned_abs() as usize)
        })
    }

    /// Exponent-wise product; only valid when the two monomials are already
    /// in order (`self`'s last generator at or before `other`'s first).
    pub(crate) fn concat(&self, other: &Monomial, names: &[String]) -> Result<Self> {
        let mut m = *self;
        for (i, (a, b)) in m.0.iter_mut().zip(other.0.iter()).enumerate() {
            *a = a
                .checked_add(*b)
                .ok_or_else(|| Error::ExponentOverflow(names[i].clone()))?;
        }
        Ok(m)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, names }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (g, &e) in self.mono.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&self.names[g])?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
