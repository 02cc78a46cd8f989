use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use super::base::{CommBase, Derivation};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::expr::{self, canonical_name, ExprTarget};
use crate::rational::Rational;

pub const MAX_VARS: usize = 3;

pub type VarExponents = [u32; MAX_VARS];

/// `Σ c_M M` with base coefficients on the left of skew-variable monomials
/// `M = X_0^e0 X_1^e1 ...` in tower order.
#[derive(Clone, Default, PartialEq)]
pub struct TowerElement {
    terms: BTreeMap<VarExponents, CommBase>,
}

impl TowerElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn base(c: CommBase) -> Self {
        Self::term(c, [0; MAX_VARS])
    }

    pub fn term(c: CommBase, m: VarExponents) -> Self {
        let mut t = Self::zero();
        t.add_term(m, c);
        t
    }

    pub fn var(k: usize) -> Self {
        let mut m = [0; MAX_VARS];
        m[k] = 1;
        Self::term(CommBase::one(), m)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&VarExponents, &CommBase)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &VarExponents) -> CommBase {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The coefficient of `1` if no skew variable occurs.
    pub fn as_base(&self) -> Option<CommBase> {
        if self.terms.keys().all(|m| *m == [0; MAX_VARS]) {
            Some(self.coeff(&[0; MAX_VARS]))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, m: VarExponents, c: CommBase) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, d) in &self.terms {
            out.add_term(*m, d.scale(c));
        }
        out
    }

    /// `c * self` for a base element `c`.
    pub fn left_base_mul(&self, c: &CommBase) -> Self {
        let mut out = Self::zero();
        for (m, d) in &self.terms {
            out.add_term(*m, c.mul(d));
        }
        out
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> TowerDisplay<'a> {
        TowerDisplay { t: self, names }
    }
}

impl fmt::Debug for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

pub struct TowerDisplay<'a> {
    t: &'a TowerElement,
    names: &'a [String],
}

impl fmt::Display for TowerDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.t.terms.iter().rev().enumerate() {
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| match e {
                    1 => self.names[i].clone(),
                    e => format!("{}^{e}", self.names[i]),
                })
                .collect();
            let coeff = c.to_string();
            let simple = !coeff[1..].contains([' ', '+']) && !coeff.contains("h");
            let term = match (vars.is_empty(), coeff.as_str()) {
                (true, _) => coeff.clone(),
                (false, "1") => vars.join("*"),
                (false, "-1") => format!("-{}", vars.join("*")),
                (false, _) if simple => format!("{coeff}*{}", vars.join("*")),
                (false, _) => format!("({coeff})*{}", vars.join("*")),
            };
            match (i, term.strip_prefix('-')) {
                (0, _) => f.write_str(&term)?,
                (_, Some(rest)) if simple || vars.is_empty() && !coeff[1..].contains(' ') => {
                    write!(f, " - {rest}")?
                }
                _ => write!(f, " + {term}")?,
            }
        }
        Ok(())
    }
}

/// One Ore step `R[X; σ, ∂]`. `σ` is the identity on the base; on earlier
/// skew variables it is given by `sigma_vars`.
#[derive(Clone, Debug)]
pub struct SkewVariable {
    pub name: String,
    pub sigma_vars: Vec<TowerElement>,
    pub delta_base: Derivation,
    pub delta_vars: Vec<TowerElement>,
}

/// An iterated Ore extension of a commutative base.
#[derive(Clone, Debug)]
pub struct Tower {
    pub name: String,
    pub uses_h: bool,
    pub vars: Vec<SkewVariable>,
    names: Vec<String>,
}

impl Tower {
    pub fn new(name: &str, uses_h: bool, vars: Vec<SkewVariable>) -> Self {
        assert!(vars.len() <= MAX_VARS);
        for (k, v) in vars.iter().enumerate() {
            assert_eq!(v.sigma_vars.len(), k, "σ images for {}", v.name);
            assert_eq!(v.delta_vars.len(), k, "∂ images for {}", v.name);
        }
        let names = vars.iter().map(|v| v.name.clone()).collect();
        Tower {
            name: name.to_string(),
            uses_h,
            vars,
            names,
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        let name = canonical_name(name);
        self.names.iter().position(|n| n == name)
    }

    pub fn var(&self, name: &str) -> TowerElement {
        TowerElement::var(self.var_index(name).expect("skew variable"))
    }

    /// `X_k * M` for a skew monomial `M`.
    fn var_times_monomial(&self, k: usize, m: &VarExponents) -> TowerElement {
        match m.iter().position(|e| *e > 0) {
            Some(i) if i < k => {
                let mut rest = *m;
                rest[i] -= 1;
                // X_k X_i = σ_k(X_i) X_k + ∂_k(X_i)
                let v = &self.vars[k];
                let moved = self.var_times_monomial(k, &rest);
                let a = self.mul(&v.sigma_vars[i], &moved);
                let b = self.mul(&v.delta_vars[i], &TowerElement::term(CommBase::one(), rest));
                a.add(&b)
            }
            _ => {
                let mut out = *m;
                out[k] += 1;
                TowerElement::term(CommBase::one(), out)
            }
        }
    }

    /// `X_k * e`, using `X_k c = c X_k + ∂_k(c)` on base coefficients.
    pub fn var_times(&self, k: usize, e: &TowerElement) -> TowerElement {
        let mut out = TowerElement::zero();
        for (m, c) in e.terms() {
            let moved = self.var_times_monomial(k, m).left_base_mul(c);
            out = out.add(&moved);
            let d = self.vars[k].delta_base.apply(c);
            out.add_term(*m, d);
        }
        out
    }

    pub fn mul(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        let mut out = TowerElement::zero();
        for (m, c) in a.terms() {
            let mut acc = b.clone();
            for k in (0..self.vars.len()).rev() {
                for _ in 0..m[k] {
                    acc = self.var_times(k, &acc);
                }
            }
            out = out.add(&acc.left_base_mul(c));
        }
        out
    }

    pub fn commutator(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    /// `σ_k` on an element of the variables below `X_k`.
    pub fn sigma(&self, k: usize, a: &TowerElement) -> TowerElement {
        let mut out = TowerElement::zero();
        for (m, c) in a.terms() {
            let mut acc = TowerElement::base(c.clone());
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    acc = self.mul(&acc, &self.vars[k].sigma_vars[i]);
                }
            }
            out = out.add(&acc);
        }
        out
    }

    pub fn parse(&self, text: &str) -> Result<TowerElement> {
        let e = expr::parse_expr(text)?;
        expr::evaluate(&mut TowerAlgebra { tower: self }, &e)
    }

    pub fn render(&self, e: &TowerElement) -> String {
        e.display(&self.names).to_string()
    }
}

/// A tower as an [`Algebra`] and expression target. Symbols: `u`, `x`,
/// `h` (when enabled) and the skew variables.
pub struct TowerAlgebra<'t> {
    pub tower: &'t Tower,
}

impl Algebra for TowerAlgebra<'_> {
    type Elem = TowerElement;

    fn zero(&self) -> TowerElement {
        TowerElement::zero()
    }
    fn one(&self) -> TowerElement {
        TowerElement::base(CommBase::one())
    }
    fn add(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        a.add(b)
    }
    fn scale(&self, a: &TowerElement, c: &Rational) -> TowerElement {
        a.scale(c)
    }
    fn mul(&mut self, a: &TowerElement, b: &TowerElement) -> Result<TowerElement> {
        Ok(self.tower.mul(a, b))
    }
    fn is_zero(&self, a: &TowerElement) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &TowerElement) -> String {
        self.tower.render(a)
    }
}

impl ExprTarget for TowerAlgebra<'_> {
    fn symbol(&mut self, name: &str) -> Result<TowerElement> {
        match canonical_name(name) {
            "u" => Ok(TowerElement::base(CommBase::u())),
            "x" => Ok(TowerElement::base(CommBase::x())),
            "h" if self.tower.uses_h => Ok(TowerElement::base(CommBase::h())),
            other => self
                .tower
                .var_index(other)
                .map(TowerElement::var)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string())),
        }
    }

    fn inverse(&mut self, a: &TowerElement, shown: &str) -> Result<TowerElement> {
        let b = a
            .as_base()
            .ok_or_else(|| Error::NegativePowerNotInvertible(shown.to_string()))?;
        b.inverse()
            .map(TowerElement::base)
            .ok_or_else(|| Error::UnsupportedDenominator(shown.to_string()))
    }
}
