//! The commutative coefficient rings: rational functions in `u, x` whose
//! denominators are built from `ux + 2`, `ux + 4`, `u` and `x`, optionally
//! extended by `h` with `h^2 = (ux + 2)^-1`.

use std::fmt;

use num_traits::One;

use super::laurent::Laurent;
use crate::rational::Rational;

/// `num / ((ux+2)^p (ux+4)^q)`; the atoms `u`, `x` live in the Laurent
/// numerator.
#[derive(Clone, Default)]
pub struct RatFunc {
    num: Laurent,
    p: u32,
    q: u32,
}

const P_CONST: i64 = 2;
const Q_CONST: i64 = 4;

impl RatFunc {
    pub fn new(num: Laurent, p: u32, q: u32) -> Self {
        RatFunc { num, p, q }.reduced()
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_laurent(Laurent::one())
    }

    pub fn from_laurent(num: Laurent) -> Self {
        RatFunc { num, p: 0, q: 0 }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_laurent(Laurent::constant(c))
    }

    pub fn u() -> Self {
        Self::from_laurent(Laurent::u())
    }

    pub fn x() -> Self {
        Self::from_laurent(Laurent::x())
    }

    /// `(ux + 2)^-n`
    pub fn p_inv(n: u32) -> Self {
        RatFunc::new(Laurent::one(), n, 0)
    }

    /// `(ux + 4)^-n`
    pub fn q_inv(n: u32) -> Self {
        RatFunc::new(Laurent::one(), 0, n)
    }

    pub fn numerator(&self) -> &Laurent {
        &self.num
    }

    pub fn denominator_powers(&self) -> (u32, u32) {
        (self.p, self.q)
    }

    /// Cancel factors of `ux + 2` and `ux + 4` shared with the numerator.
    fn reduced(mut self) -> Self {
        if self.num.is_zero() {
            return RatFunc::zero();
        }
        while self.p > 0 {
            match self.num.div_linear(P_CONST) {
                Some(n) => {
                    self.num = n;
                    self.p -= 1;
                }
                None => break,
            }
        }
        while self.q > 0 {
            match self.num.div_linear(Q_CONST) {
                Some(n) => {
                    self.num = n;
                    self.q -= 1;
                }
                None => break,
            }
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn lifted(&self, p: u32, q: u32) -> Laurent {
        self.num
            .mul(&Laurent::linear(P_CONST).pow(p - self.p))
            .mul(&Laurent::linear(Q_CONST).pow(q - self.q))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (p, q) = (self.p.max(other.p), self.q.max(other.q));
        RatFunc::new(self.lifted(p, q).add(&other.lifted(p, q)), p, q)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RatFunc::new(self.num.scale(c), self.p, self.q)
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatFunc::new(self.num.mul(&other.num), self.p + other.p, self.q + other.q)
    }

    /// Quotient-rule partial derivative in `u`.
    pub fn partial_u(&self) -> Self {
        self.partial(Laurent::partial_u, Laurent::x())
    }

    pub fn partial_x(&self) -> Self {
        self.partial(Laurent::partial_x, Laurent::u())
    }

    /// `d(N P^-p Q^-q) = dN P^-p Q^-q - p N dP P^-(p+1) Q^-q - q N dQ P^-p Q^-(q+1)`
    /// where `dP = dQ = other` variable.
    fn partial(&self, d: fn(&Laurent) -> Laurent, other: Laurent) -> Self {
        let mut out = RatFunc::new(d(&self.num), self.p, self.q);
        if self.p > 0 {
            let t = self
                .num
                .mul(&other)
                .scale(&Rational::integer(-(self.p as i64)));
            out = out.add(&RatFunc::new(t, self.p + 1, self.q));
        }
        if self.q > 0 {
            let t = self
                .num
                .mul(&other)
                .scale(&Rational::integer(-(self.q as i64)));
            out = out.add(&RatFunc::new(t, self.p, self.q + 1));
        }
        out
    }

    /// If `self` is `(ux+2)^k (ux+4)^l` times a Laurent term, its inverse.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut num = self.num.clone();
        let (mut k, mut l) = (0, 0);
        while let Some(n) = num.div_linear(P_CONST) {
            num = n;
            k += 1;
        }
        while let Some(n) = num.div_linear(Q_CONST) {
            num = n;
            l += 1;
        }
        let ((a, b), c) = num.as_monomial()?;
        let inv = Laurent::term(c.recip(), -a, -b)
            .mul(&Laurent::linear(P_CONST).pow(self.p))
            .mul(&Laurent::linear(Q_CONST).pow(self.q));
        Some(RatFunc::new(inv, k, l))
    }
}

impl PartialEq for RatFunc {
    /// Cross-multiplied equality.
    fn eq(&self, other: &Self) -> bool {
        let (p, q) = (self.p.max(other.p), self.q.max(other.q));
        self.lifted(p, q) == other.lifted(p, q)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let simple = self.num.len() <= 1;
        if self.p == 0 && self.q == 0 {
            return write!(f, "{}", self.num);
        }
        if simple {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        if self.p > 0 {
            write!(f, "*(u*x + 2)^-{}", self.p)?;
        }
        if self.q > 0 {
            write!(f, "*(u*x + 4)^-{}", self.q)?;
        }
        Ok(())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `a + b h` with `h^2 = (ux + 2)^-1`. Without `h`, `b = 0`.
#[derive(Clone, Default, PartialEq)]
pub struct CommBase {
    pub a: RatFunc,
    pub b: RatFunc,
}

impl CommBase {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rat(RatFunc::one())
    }

    pub fn from_rat(a: RatFunc) -> Self {
        CommBase {
            a,
            b: RatFunc::zero(),
        }
    }

    pub fn new(a: RatFunc, b: RatFunc) -> Self {
        CommBase { a, b }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_rat(RatFunc::constant(c))
    }

    pub fn integer(c: i64) -> Self {
        Self::constant(Rational::integer(c))
    }

    pub fn u() -> Self {
        Self::from_rat(RatFunc::u())
    }

    pub fn x() -> Self {
        Self::from_rat(RatFunc::x())
    }

    pub fn h() -> Self {
        CommBase::new(RatFunc::zero(), RatFunc::one())
    }

    /// `h^-1 = h (ux + 2)`
    pub fn h_inv() -> Self {
        CommBase::new(
            RatFunc::zero(),
            RatFunc::from_laurent(Laurent::linear(P_CONST)),
        )
    }

    /// `ux + c`
    pub fn linear(c: i64) -> Self {
        Self::from_rat(RatFunc::from_laurent(Laurent::linear(c)))
    }

    pub fn has_h(&self) -> bool {
        !self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        CommBase::new(self.a.add(&o.a), self.b.add(&o.b))
    }

    pub fn sub(&self, o: &Self) -> Self {
        CommBase::new(self.a.sub(&o.a), self.b.sub(&o.b))
    }

    pub fn neg(&self) -> Self {
        CommBase::new(self.a.neg(), self.b.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CommBase::new(self.a.scale(c), self.b.scale(c))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let hh = RatFunc::p_inv(1);
        let a = self.a.mul(&o.a).add(&self.b.mul(&o.b).mul(&hh));
        let b = self.a.mul(&o.b).add(&self.b.mul(&o.a));
        CommBase::new(a, b)
    }

    /// Inverse when `self` is an atom-monomial, possibly times `h`.
    pub fn inverse(&self) -> Option<Self> {
        if self.b.is_zero() {
            return Some(CommBase::from_rat(self.a.inverse()?));
        }
        if self.a.is_zero() {
            // (b h)^-1 = b^-1 h^-1
            return Some(CommBase::from_rat(self.b.inverse()?).mul(&CommBase::h_inv()));
        }
        None
    }

    /// Formal partial in `u`, with `∂h/∂u = -1/2 (ux+2)^-1 h x`.
    pub fn partial_u(&self) -> Self {
        self.partial(RatFunc::partial_u, RatFunc::x())
    }

    pub fn partial_x(&self) -> Self {
        self.partial(RatFunc::partial_x, RatFunc::u())
    }

    fn partial(&self, d: fn(&RatFunc) -> RatFunc, dp: RatFunc) -> Self {
        // d(b h) = d(b) h + b d(h), d(h) = -1/2 (ux+2)^-1 dP h.
        let dh_coeff = RatFunc::p_inv(1).mul(&dp).scale(&-Rational::half());
        CommBase::new(d(&self.a), d(&self.b).add(&self.b.mul(&dh_coeff)))
    }
}

impl fmt::Display for CommBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "({})*h", self.b),
            (false, false) => write!(f, "{} + ({})*h", self.a, self.b),
        }
    }
}

impl fmt::Debug for CommBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A derivation of the base, fixed by its values on `u` and `x` and
/// extended by the chain rule: `∂f = f_u ∂u + f_x ∂x`.
#[derive(Clone, Debug, PartialEq)]
pub struct Derivation {
    pub name: String,
    pub du: CommBase,
    pub dx: CommBase,
}

impl Derivation {
    pub fn new(name: &str, du: CommBase, dx: CommBase) -> Self {
        Derivation {
            name: name.to_string(),
            du,
            dx,
        }
    }

    pub fn apply(&self, f: &CommBase) -> CommBase {
        f.partial_u()
            .mul(&self.du)
            .add(&f.partial_x().mul(&self.dx))
    }

    /// `c ∂`
    pub fn scaled(&self, name: &str, c: &CommBase) -> Self {
        Derivation::new(name, c.mul(&self.du), c.mul(&self.dx))
    }

    pub fn plus(&self, name: &str, other: &Derivation) -> Self {
        Derivation::new(name, self.du.add(&other.du), self.dx.add(&other.dx))
    }

    pub fn zero(name: &str) -> Self {
        Derivation::new(name, CommBase::zero(), CommBase::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_equality() {
        let p = RatFunc::from_laurent(Laurent::linear(2));
        assert_eq!(p.mul(&RatFunc::p_inv(1)), RatFunc::one());
        let a = RatFunc::new(Laurent::u(), 1, 0);
        let b = RatFunc::new(Laurent::u().mul(&Laurent::linear(4)), 1, 1);
        assert_eq!(a, b);
        assert_eq!(b.denominator_powers(), (1, 0));
    }

    #[test]
    fn h_squared() {
        let h = CommBase::h();
        assert_eq!(h.mul(&h), CommBase::from_rat(RatFunc::p_inv(1)));
        assert_eq!(h.mul(&CommBase::h_inv()), CommBase::one());
    }

    #[test]
    fn inverses() {
        let f = CommBase::from_rat(RatFunc::new(
            Laurent::term(Rational::integer(3), 2, -1),
            2,
            1,
        ));
        assert_eq!(f.mul(&f.inverse().unwrap()), CommBase::one());
        let g = CommBase::linear(2)
            .mul(&CommBase::linear(4))
            .mul(&CommBase::x());
        assert_eq!(g.mul(&g.inverse().unwrap()), CommBase::one());
        assert!(CommBase::u().add(&CommBase::x()).inverse().is_none());
    }
}
