//! A minimal ring interface so that polynomials, towers, tensors and scalars
//! can all be targets of substitution and expression evaluation.

use num_traits::{One, Zero};

use crate::error::Result;
use crate::rational::Rational;

pub trait Algebra {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &Rational) -> Self::Elem;
    /// Multiplication may need scratch state (rewrite caches), hence `&mut`.
    fn mul(&mut self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Human-readable form, in the expression grammar where possible.
    fn render(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.scale(b, &-Rational::one()))
    }

    fn constant(&self, c: &Rational) -> Self::Elem {
        self.scale(&self.one(), c)
    }

    fn commutator(&mut self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        let ab = self.mul(a, b)?;
        let ba = self.mul(b, a)?;
        Ok(self.sub(&ab, &ba))
    }

    fn pow(&mut self, a: &Self::Elem, n: u32) -> Result<Self::Elem> {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    fn product(&mut self, factors: &[Self::Elem]) -> Result<Self::Elem> {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }
}

/// The scalars themselves; the target of the counit.
#[derive(Debug, Default, Clone, Copy)]
pub struct Scalars;

impl Algebra for Scalars {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn scale(&self, a: &Rational, c: &Rational) -> Rational {
        a * c
    }
    fn mul(&mut self, a: &Rational, b: &Rational) -> Result<Rational> {
        Ok(a * b)
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &Rational) -> String {
        a.to_string()
    }
}
