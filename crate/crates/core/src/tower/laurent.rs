use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Laurent polynomial in the commuting variables `u`, `x`; keys are
/// `(exp_u, exp_x)`.
#[derive(Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct Laurent {
    terms: BTreeMap<(i32, i32), Rational>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn term(c: Rational, eu: i32, ex: i32) -> Self {
        let mut l = Self::zero();
        l.add_term((eu, ex), c);
        l
    }

    pub fn u() -> Self {
        Self::term(Rational::one(), 1, 0)
    }

    pub fn x() -> Self {
        Self::term(Rational::one(), 0, 1)
    }

    /// `ux + c`
    pub fn linear(c: i64) -> Self {
        let mut l = Self::term(Rational::one(), 1, 1);
        l.add_term((0, 0), Rational::integer(c));
        l
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.iter().next() {
            None => Some(Rational::zero()),
            Some((&(0, 0), c)) if self.terms.len() == 1 => Some(c.clone()),
            _ => None,
        }
    }

    /// The single term, if there is exactly one.
    pub fn as_monomial(&self) -> Option<((i32, i32), Rational)> {
        let mut it = self.terms.iter();
        match (it.next(), it.next()) {
            (Some((k, c)), None) => Some((*k, c.clone())),
            _ => None,
        }
    }

    pub fn add_term(&mut self, key: (i32, i32), c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            for ((d, e), f) in &other.terms {
                out.add_term((a + d, b + e), c * f);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn partial_u(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term((a - 1, b), c * &Rational::integer(a as i64));
        }
        out
    }

    pub fn partial_x(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term((a, b - 1), c * &Rational::integer(b as i64));
        }
        out
    }

    /// Exact quotient by `ux + c`, or `None` if `ux + c` does not divide.
    ///
    /// Terms are grouped by `exp_u - exp_x`; within a group the polynomial
    /// is a Laurent polynomial in `t = ux` times a fixed monomial, and the
    /// division is synthetic division by `t + c`.
    pub fn div_linear(&self, c: i64) -> Option<Self> {
        let mut groups: BTreeMap<i32, BTreeMap<i32, Rational>> = BTreeMap::new();
        for (&(a, b), coef) in &self.terms {
            // u^a x^b = m_d * t^k with d = a - b and k = min(a, b).
            groups
                .entry(a - b)
                .or_default()
                .insert(a.min(b), coef.clone());
        }
        let c = Rational::integer(c);
        let mut out = Self::zero();
        for (d, coeffs) in groups {
            let lo = *coeffs.keys().next().unwrap();
            let hi = *coeffs.keys().next_back().unwrap();
            // Descending coefficients of f(t) = sum coeffs[k] t^(k - lo).
            let mut rem = Rational::zero();
            let mut quotient = Vec::new();
            for k in (lo..=hi).rev() {
                let a_k = coeffs.get(&k).cloned().unwrap_or_else(Rational::zero);
                let cur = &a_k - &(&c * &rem);
                if k > lo {
                    quotient.push((k - 1, cur.clone()));
                }
                rem = cur;
            }
            if !rem.is_zero() {
                return None;
            }
            for (k, q) in quotient {
                let (a, b) = if d >= 0 { (k + d, k) } else { (k, k - d) };
                out.add_term((a, b), q);
            }
        }
        Some(out)
    }

    /// Rendered in the expression grammar.
    pub fn to_expr(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by(|((a1, b1), _), ((a2, b2), _)| (a2 + b2, a2).cmp(&(a1 + b1, a1)));
        for (i, (&(a, b), c)) in keys.into_iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let mut factors = Vec::new();
            for (name, e) in [("u", a), ("x", b)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_by_linear_atoms() {
        let p = Laurent::linear(2);
        let q = Laurent::linear(4);
        let f = p.mul(&q).mul(&Laurent::term(Rational::new(3, 2), -2, 1));
        assert_eq!(
            f.div_linear(2).unwrap(),
            q.mul(&Laurent::term(Rational::new(3, 2), -2, 1))
        );
        assert_eq!(
            f.div_linear(4).unwrap().div_linear(2).unwrap(),
            Laurent::term(Rational::new(3, 2), -2, 1)
        );
        assert!(f.div_linear(2).unwrap().div_linear(2).is_none());
        assert!(Laurent::u().div_linear(2).is_none());
        assert_eq!(Laurent::zero().div_linear(2), Some(Laurent::zero()));
    }

    #[test]
    fn partials() {
        let f = Laurent::term(Rational::integer(3), 2, -1);
        assert_eq!(f.partial_u(), Laurent::term(Rational::integer(6), 1, -1));
        assert_eq!(f.partial_x(), Laurent::term(Rational::integer(-3), 2, -2));
    }
}
